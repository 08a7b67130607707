#include "uga/baer/algebra.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>

#include "uga/errors.hpp"

namespace uga {

namespace {

linalg::RowSpace<linalg::FqOps> make_space(const FqField& f, std::size_t n, const std::vector<AlgebraVector>& rows) {
  return linalg::row_space(linalg::FqOps{f}, n, rows);
}

}  // namespace

Subspace::Subspace(FqField field, std::size_t ambient) : field_(std::move(field)), ambient_(ambient) {}

Subspace::Subspace(FqField field, std::size_t ambient, const std::vector<AlgebraVector>& spanning)
    : field_(std::move(field)), ambient_(ambient) {
  const auto space = make_space(field_, ambient_, spanning);
  basis_ = space.rows();
  pivots_ = space.pivots();
}

Subspace Subspace::full(FqField field, std::size_t ambient) {
  std::vector<AlgebraVector> rows;
  for (std::size_t i = 0; i < ambient; ++i) {
    AlgebraVector v(ambient, 0);
    v[i] = 1;
    rows.push_back(std::move(v));
  }
  return Subspace(std::move(field), ambient, rows);
}

bool Subspace::contains(const AlgebraVector& v) const {
  if (v.size() != ambient_) fail(ErrorKind::DimensionMismatch, "vector outside the ambient space");
  AlgebraVector r = v;
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    const auto c = r[pivots_[k]];
    if (c == 0) continue;
    for (std::size_t j = 0; j < ambient_; ++j)
      if (basis_[k][j] != 0) r[j] = field_.sub(r[j], field_.mul(c, basis_[k][j]));
  }
  return std::all_of(r.begin(), r.end(), [](auto x) { return x == 0; });
}

std::vector<FqField::code_type> Subspace::coordinates(const AlgebraVector& v) const {
  if (!contains(v)) fail(ErrorKind::InvalidArgument, "vector outside the subspace");
  std::vector<FqField::code_type> out;
  for (auto p : pivots_) out.push_back(v[p]);
  return out;
}

Subspace Subspace::intersect(const Subspace& other) const {
  if (ambient_ != other.ambient_) fail(ErrorKind::DimensionMismatch, "subspaces of different spaces");
  return Subspace(field_, ambient_, linalg::intersect(linalg::FqOps{field_}, ambient_, basis_, other.basis_));
}

Subspace Subspace::sum(const Subspace& other) const {
  if (ambient_ != other.ambient_) fail(ErrorKind::DimensionMismatch, "subspaces of different spaces");
  auto rows = basis_;
  rows.insert(rows.end(), other.basis_.begin(), other.basis_.end());
  return Subspace(field_, ambient_, rows);
}

bool Subspace::is_subspace_of(const Subspace& other) const {
  return std::all_of(basis_.begin(), basis_.end(), [&](const auto& v) { return other.contains(v); });
}

StructureAlgebra::StructureAlgebra(FqField field, std::size_t dim, std::vector<std::vector<Term>> products,
                                   AlgebraVector unit, std::string name)
    : field_(std::move(field)), n_(dim), products_(std::move(products)), unit_(std::move(unit)), name_(std::move(name)) {
  if (n_ == 0) fail(ErrorKind::InvalidArgument, "algebra of dimension 0");
  if (products_.size() != n_ * n_) fail(ErrorKind::DimensionMismatch, "structure table must have dim^2 entries");
  if (unit_.size() != n_) fail(ErrorKind::DimensionMismatch, "unit has the wrong length");
  const auto q = field_.order();
  for (auto& terms : products_) {
    for (const auto& [k, c] : terms)
      if (k >= n_ || c >= q) fail(ErrorKind::InvalidArgument, "structure constant out of range");
    std::sort(terms.begin(), terms.end());
    std::vector<Term> merged;
    for (const auto& [k, c] : terms) {
      if (!merged.empty() && merged.back().first == k)
        merged.back().second = field_.add(merged.back().second, c);
      else
        merged.emplace_back(k, c);
    }
    std::erase_if(merged, [](const Term& t) { return t.second == 0; });
    terms = std::move(merged);
  }
  for (auto c : unit_)
    if (c >= q) fail(ErrorKind::InvalidArgument, "unit coordinate out of range");

  for (std::size_t i = 0; i < n_; ++i) {
    const auto e = basis(i);
    if (multiply(unit_, e) != e || multiply(e, unit_) != e)
      fail(ErrorKind::InvalidArgument, "declared unit is not a two-sided identity");
  }
  if (n_ <= kAssociativityCheckDim) {
    std::vector<AlgebraVector> basis_products(n_ * n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) basis_products[i * n_ + j] = multiply(basis(i), basis(j));
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        for (std::size_t k = 0; k < n_; ++k)
          if (multiply(basis_products[i * n_ + j], basis(k)) != multiply(basis(i), basis_products[j * n_ + k]))
            fail(ErrorKind::InvalidArgument, "structure constants are not associative at (" + std::to_string(i) +
                                                 ", " + std::to_string(j) + ", " + std::to_string(k) + ")");
  }
}

AlgebraVector StructureAlgebra::basis(std::size_t i) const {
  AlgebraVector v(n_, 0);
  v.at(i) = 1;
  return v;
}

AlgebraVector StructureAlgebra::multiply(const AlgebraVector& x, const AlgebraVector& y) const {
  if (x.size() != n_ || y.size() != n_) fail(ErrorKind::DimensionMismatch, "element of the wrong dimension");
  AlgebraVector out(n_, 0);
  for (std::size_t i = 0; i < n_; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < n_; ++j) {
      if (y[j] == 0) continue;
      const auto xy = field_.mul(x[i], y[j]);
      for (const auto& [k, c] : products_[i * n_ + j]) out[k] = field_.add(out[k], field_.mul(xy, c));
    }
  }
  return out;
}

AlgebraVector StructureAlgebra::add(const AlgebraVector& x, const AlgebraVector& y) const {
  AlgebraVector out(n_);
  for (std::size_t i = 0; i < n_; ++i) out[i] = field_.add(x[i], y[i]);
  return out;
}

AlgebraVector StructureAlgebra::sub(const AlgebraVector& x, const AlgebraVector& y) const {
  AlgebraVector out(n_);
  for (std::size_t i = 0; i < n_; ++i) out[i] = field_.sub(x[i], y[i]);
  return out;
}

AlgebraVector StructureAlgebra::scale(code_type c, const AlgebraVector& x) const {
  AlgebraVector out(n_);
  for (std::size_t i = 0; i < n_; ++i) out[i] = field_.mul(c, x[i]);
  return out;
}

AlgebraVector StructureAlgebra::power(const AlgebraVector& x, std::uint64_t e) const {
  AlgebraVector result = unit_, base = x;
  while (e > 0) {
    if (e & 1) result = multiply(result, base);
    e >>= 1;
    if (e > 0) base = multiply(base, base);
  }
  return result;
}

bool StructureAlgebra::is_zero(const AlgebraVector& x) {
  return std::all_of(x.begin(), x.end(), [](auto c) { return c == 0; });
}

bool StructureAlgebra::is_commutative() const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j)
      if (products_[i * n_ + j] != products_[j * n_ + i]) return false;
  return true;
}

bool StructureAlgebra::is_central(const AlgebraVector& x) const {
  for (std::size_t i = 0; i < n_; ++i) {
    const auto e = basis(i);
    if (multiply(x, e) != multiply(e, x)) return false;
  }
  return true;
}

std::optional<std::uint64_t> StructureAlgebra::element_count() const {
  const std::uint64_t q = field_.order();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n_; ++i) {
    if (total > std::numeric_limits<std::uint64_t>::max() / q) return std::nullopt;
    total *= q;
  }
  return total;
}

AlgebraVector StructureAlgebra::element_at(std::uint64_t index) const {
  const std::uint64_t q = field_.order();
  AlgebraVector x(n_, 0);
  for (std::size_t c = n_; c-- > 0;) {
    x[c] = static_cast<code_type>(index % q);
    index /= q;
  }
  return x;
}

std::string StructureAlgebra::format(const AlgebraVector& x) const {
  std::string out = "[";
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) out += ",";
    out += field_.element(x[i]).to_string();
  }
  return out + "]";
}

StructureAlgebra algebra_from_group(const FiniteGroup& group, const FqField& field) {
  const auto n = group.order();
  std::vector<std::vector<StructureAlgebra::Term>> products(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      products[i * n + j] = {{group.multiply(static_cast<FiniteGroup::element_type>(i),
                                             static_cast<FiniteGroup::element_type>(j)),
                              1}};
  AlgebraVector unit(n, 0);
  unit[group.identity()] = 1;
  return StructureAlgebra(field, n, std::move(products), std::move(unit), field.to_string() + "[" + group.name() + "]");
}

std::uint64_t default_budget() {
  constexpr std::uint64_t kDefault = std::uint64_t{1} << 20;
  const char* env = std::getenv("UGA_BUDGET");
  if (!env || !*env) return kDefault;
  char* end = nullptr;
  const auto value = std::strtoull(env, &end, 10);
  if (*end != '\0' || value == 0) fail(ErrorKind::InvalidArgument, "UGA_BUDGET must be a positive integer");
  return value;
}

void require_enumerable(const StructureAlgebra& a, std::uint64_t budget) {
  const auto count = a.element_count();
  if (!count || *count > budget)
    throw BudgetExceeded(count.value_or(std::numeric_limits<std::uint64_t>::max()), budget);
}

AlgebraCenter algebra_center(const StructureAlgebra& a) {
  const auto n = a.dim();
  const auto& f = a.field();
  // (x e_i - e_i x)_k = sum_j x_j (c^k_{ji} - c^k_{ij})
  std::vector<AlgebraVector> equations;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<AlgebraVector> rows(n, AlgebraVector(n, 0));
    for (std::size_t j = 0; j < n; ++j) {
      for (const auto& [k, c] : a.product_terms(j, i)) rows[k][j] = f.add(rows[k][j], c);
      for (const auto& [k, c] : a.product_terms(i, j)) rows[k][j] = f.sub(rows[k][j], c);
    }
    for (auto& r : rows) equations.push_back(std::move(r));
  }
  Subspace space(f, n, linalg::nullspace(linalg::FqOps{f}, n, equations));
  const auto m = space.dim();
  std::vector<std::vector<StructureAlgebra::Term>> products(m * m);
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t s = 0; s < m; ++s) {
      const auto coords = space.coordinates(a.multiply(space.basis()[r], space.basis()[s]));
      for (std::size_t k = 0; k < m; ++k)
        if (coords[k] != 0) products[r * m + s].emplace_back(static_cast<std::uint32_t>(k), coords[k]);
    }
  auto unit = space.coordinates(a.unit());
  StructureAlgebra center(f, m, std::move(products), std::move(unit), "Z(" + a.name() + ")");
  return {std::move(space), std::move(center)};
}

namespace {

// Rows of the linear conditions x s = 0 (left) or s x = 0 (right) on x.
std::vector<AlgebraVector> annihilator_equations(const StructureAlgebra& a, const std::vector<AlgebraVector>& s,
                                                 bool left) {
  const auto n = a.dim();
  std::vector<AlgebraVector> equations;
  for (const auto& v : s) {
    if (v.size() != n) fail(ErrorKind::DimensionMismatch, "annihilated element has the wrong dimension");
    std::vector<AlgebraVector> rows(n, AlgebraVector(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
      const auto e = a.basis(i);
      const auto prod = left ? a.multiply(e, v) : a.multiply(v, e);
      for (std::size_t k = 0; k < n; ++k) rows[k][i] = prod[k];
    }
    for (auto& r : rows) equations.push_back(std::move(r));
  }
  return equations;
}

}  // namespace

Subspace left_annihilator(const StructureAlgebra& a, const std::vector<AlgebraVector>& s) {
  return Subspace(a.field(), a.dim(), linalg::nullspace(linalg::FqOps{a.field()}, a.dim(), annihilator_equations(a, s, true)));
}

Subspace right_annihilator(const StructureAlgebra& a, const std::vector<AlgebraVector>& s) {
  return Subspace(a.field(), a.dim(), linalg::nullspace(linalg::FqOps{a.field()}, a.dim(), annihilator_equations(a, s, false)));
}

bool is_left_ideal(const StructureAlgebra& a, const Subspace& l) {
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (const auto& v : l.basis())
      if (!l.contains(a.multiply(a.basis(i), v))) return false;
  return true;
}

bool is_two_sided_ideal(const StructureAlgebra& a, const Subspace& l) {
  if (!is_left_ideal(a, l)) return false;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (const auto& v : l.basis())
      if (!l.contains(a.multiply(v, a.basis(i)))) return false;
  return true;
}

Subspace product_space(const StructureAlgebra& a, const Subspace& x, const Subspace& y) {
  std::vector<AlgebraVector> rows;
  for (const auto& u : x.basis())
    for (const auto& v : y.basis()) rows.push_back(a.multiply(u, v));
  return Subspace(a.field(), a.dim(), rows);
}

Subspace left_ideal_generated(const StructureAlgebra& a, const AlgebraVector& x) {
  std::vector<AlgebraVector> rows;
  for (std::size_t i = 0; i < a.dim(); ++i) rows.push_back(a.multiply(a.basis(i), x));
  return Subspace(a.field(), a.dim(), rows);
}

Subspace ideal_generated(const StructureAlgebra& a, const AlgebraVector& x) {
  const auto left = left_ideal_generated(a, x);
  std::vector<AlgebraVector> rows;
  for (const auto& v : left.basis())
    for (std::size_t j = 0; j < a.dim(); ++j) rows.push_back(a.multiply(v, a.basis(j)));
  return Subspace(a.field(), a.dim(), rows);
}

}  // namespace uga
