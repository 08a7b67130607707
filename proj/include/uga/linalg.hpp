#pragma once

// Exact dense linear algebra over a field described by an ops object.
//
// An ops type provides value_type together with zero(), one(), add, sub,
// mul, inv, neg and is_zero. FqOps works on raw F_q codes and is the fast
// path; ValueOps adapts any domain whose values carry arithmetic operators.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "uga/errors.hpp"
#include "uga/scalars/fq.hpp"

namespace uga::linalg {

struct FqOps {
  using value_type = FqField::code_type;

  FqField field;

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type add(value_type a, value_type b) const { return field.add(a, b); }
  value_type sub(value_type a, value_type b) const { return field.sub(a, b); }
  value_type mul(value_type a, value_type b) const { return field.mul(a, b); }
  value_type inv(value_type a) const { return field.inv(a); }
  value_type neg(value_type a) const { return field.neg(a); }
  bool is_zero(value_type a) const { return a == 0; }
};

template <class Domain>
struct ValueOps {
  using value_type = typename Domain::value_type;

  Domain domain;

  value_type zero() const { return domain.zero(); }
  value_type one() const { return domain.one(); }
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type inv(const value_type& a) const { return domain.inverse(a); }
  value_type neg(const value_type& a) const { return domain.zero() - a; }
  bool is_zero(const value_type& a) const { return domain.is_zero(a); }
};

template <class T>
using Row = std::vector<T>;

template <class T>
using Rows = std::vector<Row<T>>;

/// Row space kept in reduced row echelon form while rows are streamed in.
template <class Ops>
class RowSpace {
 public:
  using T = typename Ops::value_type;

  RowSpace(Ops ops, std::size_t width) : ops_(std::move(ops)), width_(width) {}

  std::size_t width() const noexcept { return width_; }
  std::size_t rank() const noexcept { return rows_.size(); }
  const Ops& ops() const noexcept { return ops_; }

  /// Reduces `row` against the current basis; returns the residue.
  Row<T> reduce(Row<T> row) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const std::size_t c = pivots_[r];
      if (ops_.is_zero(row[c])) continue;
      const T factor = row[c];
      const Row<T>& basis = rows_[r];
      for (std::size_t j = c; j < width_; ++j)
        if (!ops_.is_zero(basis[j])) row[j] = ops_.sub(row[j], ops_.mul(factor, basis[j]));
    }
    return row;
  }

  bool contains(const Row<T>& row) const { return is_zero_row(reduce(row)); }

  /// Adds a row; returns false when it was already in the span.
  bool add(Row<T> row) {
    if (row.size() != width_) fail(ErrorKind::DimensionMismatch, "row width mismatch");
    row = reduce(std::move(row));
    std::size_t c = 0;
    while (c < width_ && ops_.is_zero(row[c])) ++c;
    if (c == width_) return false;
    const T scale = ops_.inv(row[c]);
    for (std::size_t j = c; j < width_; ++j) row[j] = ops_.mul(scale, row[j]);
    // Keep the basis fully reduced: clear column c from the other rows.
    for (auto& other : rows_) {
      if (ops_.is_zero(other[c])) continue;
      const T factor = other[c];
      for (std::size_t j = c; j < width_; ++j)
        if (!ops_.is_zero(row[j])) other[j] = ops_.sub(other[j], ops_.mul(factor, row[j]));
    }
    const auto pos = static_cast<std::size_t>(
        std::lower_bound(pivots_.begin(), pivots_.end(), c) - pivots_.begin());
    pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(pos), c);
    rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(row));
    return true;
  }

  /// Canonical basis: RREF rows ordered by pivot column.
  const Rows<T>& rows() const noexcept { return rows_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  /// Basis of {x : <r, x> = 0 for every row r}, in canonical form.
  Rows<T> orthogonal_complement() const {
    std::vector<bool> is_pivot(width_, false);
    for (auto c : pivots_) is_pivot[c] = true;
    RowSpace<Ops> out(ops_, width_);
    for (std::size_t free = 0; free < width_; ++free) {
      if (is_pivot[free]) continue;
      Row<T> v(width_, ops_.zero());
      v[free] = ops_.one();
      for (std::size_t r = 0; r < rows_.size(); ++r) v[pivots_[r]] = ops_.neg(rows_[r][free]);
      out.add(std::move(v));
    }
    return out.rows();
  }

 private:
  bool is_zero_row(const Row<T>& row) const {
    return std::all_of(row.begin(), row.end(), [&](const T& x) { return ops_.is_zero(x); });
  }

  Ops ops_;
  std::size_t width_;
  Rows<T> rows_;
  std::vector<std::size_t> pivots_;
};

template <class Ops>
RowSpace<Ops> row_space(const Ops& ops, std::size_t width, const Rows<typename Ops::value_type>& rows) {
  RowSpace<Ops> space(ops, width);
  for (const auto& r : rows) space.add(r);
  return space;
}

template <class Ops>
std::size_t rank(const Ops& ops, std::size_t width, const Rows<typename Ops::value_type>& rows) {
  return row_space(ops, width, rows).rank();
}

/// Canonical basis of {x : A x = 0} where A is given by its rows.
template <class Ops>
Rows<typename Ops::value_type> nullspace(const Ops& ops, std::size_t width,
                                         const Rows<typename Ops::value_type>& equations) {
  return row_space(ops, width, equations).orthogonal_complement();
}

/// Some x with A x = b, or nullopt when the system is inconsistent.
template <class Ops>
std::optional<Row<typename Ops::value_type>> solve(const Ops& ops, std::size_t width,
                                                   const Rows<typename Ops::value_type>& equations,
                                                   const Row<typename Ops::value_type>& rhs) {
  using T = typename Ops::value_type;
  if (equations.size() != rhs.size()) fail(ErrorKind::DimensionMismatch, "rhs length mismatch");
  RowSpace<Ops> space(ops, width + 1);
  for (std::size_t i = 0; i < equations.size(); ++i) {
    Row<T> augmented = equations[i];
    if (augmented.size() != width) fail(ErrorKind::DimensionMismatch, "equation width mismatch");
    augmented.push_back(rhs[i]);
    space.add(std::move(augmented));
  }
  Row<T> x(width, ops.zero());
  for (std::size_t r = 0; r < space.rank(); ++r) {
    const std::size_t c = space.pivots()[r];
    if (c == width) return std::nullopt;
    x[c] = space.rows()[r][width];
  }
  return x;
}

/// Intersection of two subspaces given by spanning rows, in canonical form.
template <class Ops>
Rows<typename Ops::value_type> intersect(const Ops& ops, std::size_t width,
                                         const Rows<typename Ops::value_type>& a,
                                         const Rows<typename Ops::value_type>& b) {
  auto perp = row_space(ops, width, row_space(ops, width, a).orthogonal_complement());
  for (const auto& r : row_space(ops, width, b).orthogonal_complement()) perp.add(r);
  return row_space(ops, width, perp.orthogonal_complement()).rows();
}

}  // namespace uga::linalg
