#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <vector>

#include "uga/errors.hpp"
#include "uga/linalg.hpp"
#include "uga/operators/matrix.hpp"
#include "uga/scalars/fq.hpp"
#include "uga/scalars/numeric.hpp"
#include "uga/scalars/padic.hpp"
#include "uga/scalars/residue.hpp"

namespace uga {

/// Bridges an exact scalar domain to the linear algebra kernels.
template <class Domain>
struct ExactLinalg;

template <>
struct ExactLinalg<FqField> {
  using Ops = linalg::FqOps;
  static Ops ops(const FqField& f) { return {f}; }
  static FqField::code_type lower(const FqElement& x) { return x.code(); }
  static FqElement lift(const FqField& f, FqField::code_type c) { return f.element(c); }
};

template <>
struct ExactLinalg<RationalField> {
  using Ops = linalg::ValueOps<RationalField>;
  static Ops ops(const RationalField& f) { return {f}; }
  static const Rational& lower(const Rational& x) { return x; }
  static Rational lift(const RationalField&, const Rational& x) { return x; }
};

/// Entries in row-major order, as a vector of length n^2.
template <class Domain>
linalg::Row<typename ExactLinalg<Domain>::Ops::value_type> flatten(const OperatorMatrix<Domain>& m) {
  using L = ExactLinalg<Domain>;
  linalg::Row<typename L::Ops::value_type> row;
  row.reserve(m.size() * m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) row.push_back(L::lower(m.at(i, j)));
  return row;
}

/// Canonical (row-reduced) basis of the span of the given matrices.
template <class Domain>
linalg::Rows<typename ExactLinalg<Domain>::Ops::value_type> matrix_span(const Domain& domain, std::size_t n,
                                                                         const std::vector<OperatorMatrix<Domain>>& ms) {
  using L = ExactLinalg<Domain>;
  linalg::RowSpace<typename L::Ops> space(L::ops(domain), n * n);
  for (const auto& m : ms) space.add(flatten(m));
  return space.rows();
}

/// Basis of {X : X P = P X for all P in S}, row-reduced in the row-major
/// flattening of X.
template <class Domain>
std::vector<OperatorMatrix<Domain>> commutant(const std::vector<OperatorMatrix<Domain>>& s) {
  using L = ExactLinalg<Domain>;
  using T = typename L::Ops::value_type;
  if (s.empty()) fail(ErrorKind::EmptyInput, "commutant of an empty family needs an index set");
  const auto& first = s.front();
  const std::size_t n = first.size();
  for (const auto& p : s) {
    if (p.size() != n) fail(ErrorKind::DimensionMismatch, "commutant of matrices on different index sets");
    if (first.group() && p.group() && first.group()->name() != p.group()->name())
      fail(ErrorKind::GroupMismatch, "commutant of matrices indexed by different groups");
  }
  const auto ops = L::ops(first.domain());
  linalg::RowSpace<typename L::Ops> equations(ops, n * n);
  // (XP - PX)_{ij} = sum_k X_{ik} P_{kj} - sum_k P_{ik} X_{kj}
  for (const auto& p : s)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        linalg::Row<T> row(n * n, ops.zero());
        for (std::size_t k = 0; k < n; ++k) {
          const T pkj = L::lower(p.at(k, j));
          if (!ops.is_zero(pkj)) row[i * n + k] = ops.add(row[i * n + k], pkj);
          const T pik = L::lower(p.at(i, k));
          if (!ops.is_zero(pik)) row[k * n + j] = ops.sub(row[k * n + j], pik);
        }
        equations.add(std::move(row));
      }
  std::vector<OperatorMatrix<Domain>> basis;
  for (const auto& row : equations.orthogonal_complement()) {
    OperatorMatrix<Domain> x(first.domain(), n, first.group());
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) x.set(i, j, L::lift(first.domain(), row[i * n + j]));
    basis.push_back(std::move(x));
  }
  return basis;
}

/// Direct check that A commutes with every member of S; works for any domain.
template <class Domain>
bool commutes_with_all(const OperatorMatrix<Domain>& a, const std::vector<OperatorMatrix<Domain>>& s) {
  for (const auto& p : s)
    if (!(a * p == p * a)) return false;
  return true;
}

/// Exact rational value of every stored p-adic entry.
inline OperatorMatrix<RationalField> rational_lift(const OperatorMatrix<PadicField>& m) {
  OperatorMatrix<RationalField> out(RationalField{}, m.size(), m.group());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) out.set(i, j, m.at(i, j).to_rational());
  return out;
}

/// Entrywise reduction to F_p; entries must lie in the unit ball.
inline OperatorMatrix<FqField> reduce(const OperatorMatrix<PadicField>& m) {
  const auto fp = FqField::prime(m.domain().p);
  OperatorMatrix<FqField> out(fp, m.size(), m.group());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) out.set(i, j, reduce_to_residue(m.at(i, j), fp));
  return out;
}

struct PadicMembership {
  /// A P = P A over Q on the stored digits.
  bool exact_lift;
  /// Same identity after reduction mod p; nullopt when some entry has norm > 1.
  std::optional<bool> reduced;
};

inline PadicMembership padic_commutant_membership(const OperatorMatrix<PadicField>& a,
                                                  const std::vector<OperatorMatrix<PadicField>>& s) {
  PadicMembership out{true, std::nullopt};
  std::vector<OperatorMatrix<RationalField>> lifted;
  for (const auto& p : s) lifted.push_back(rational_lift(p));
  out.exact_lift = commutes_with_all(rational_lift(a), lifted);
  const auto in_ball = [](const OperatorMatrix<PadicField>& m) { return op_norm(m) <= 1; };
  if (!in_ball(a) || !std::all_of(s.begin(), s.end(), in_ball)) return out;
  std::vector<OperatorMatrix<FqField>> reduced;
  for (const auto& p : s) reduced.push_back(reduce(p));
  out.reduced = commutes_with_all(reduce(a), reduced);
  return out;
}

}  // namespace uga
