#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "uga/groups/finite_group.hpp"
#include "uga/linalg.hpp"
#include "uga/scalars/fq.hpp"

namespace uga {

/// Coordinates of an algebra element in the algebra's basis.
using AlgebraVector = std::vector<FqField::code_type>;

/// A row-reduced subspace of F_q^n. Equality is equality of the RREF basis.
class Subspace {
 public:
  Subspace(FqField field, std::size_t ambient);
  /// Row-reduces the spanning vectors.
  Subspace(FqField field, std::size_t ambient, const std::vector<AlgebraVector>& spanning);
  static Subspace full(FqField field, std::size_t ambient);

  const FqField& field() const noexcept { return field_; }
  std::size_t ambient() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return basis_.size(); }
  const std::vector<AlgebraVector>& basis() const noexcept { return basis_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  bool contains(const AlgebraVector& v) const;
  /// Coordinates of v in the RREF basis; v must lie in the subspace.
  std::vector<FqField::code_type> coordinates(const AlgebraVector& v) const;
  Subspace intersect(const Subspace& other) const;
  Subspace sum(const Subspace& other) const;
  bool is_subspace_of(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }
  /// Larger dimension first, then lexicographic on the RREF rows.
  friend bool operator<(const Subspace& a, const Subspace& b) {
    if (a.dim() != b.dim()) return a.dim() > b.dim();
    return a.basis_ < b.basis_;
  }

 private:
  FqField field_;
  std::size_t ambient_;
  std::vector<AlgebraVector> basis_;
  std::vector<std::size_t> pivots_;
};

/// A finite-dimensional unital associative algebra over F_q given by sparse
/// structure constants e_i e_j = sum_k c^k_{ij} e_k.
class StructureAlgebra {
 public:
  using code_type = FqField::code_type;
  using Term = std::pair<std::uint32_t, code_type>;

  /// Associativity is checked on all basis triples when dim <= kAssociativityCheckDim.
  static constexpr std::size_t kAssociativityCheckDim = 48;

  /// `products[i * n + j]` lists the nonzero (k, c^k_{ij}).
  StructureAlgebra(FqField field, std::size_t dim, std::vector<std::vector<Term>> products, AlgebraVector unit,
                   std::string name = "");

  const FqField& field() const noexcept { return field_; }
  std::size_t dim() const noexcept { return n_; }
  const std::string& name() const noexcept { return name_; }
  const AlgebraVector& unit() const noexcept { return unit_; }
  const std::vector<Term>& product_terms(std::size_t i, std::size_t j) const { return products_[i * n_ + j]; }

  AlgebraVector zero() const { return AlgebraVector(n_, 0); }
  AlgebraVector basis(std::size_t i) const;
  AlgebraVector multiply(const AlgebraVector& x, const AlgebraVector& y) const;
  AlgebraVector add(const AlgebraVector& x, const AlgebraVector& y) const;
  AlgebraVector sub(const AlgebraVector& x, const AlgebraVector& y) const;
  AlgebraVector scale(code_type c, const AlgebraVector& x) const;
  AlgebraVector power(const AlgebraVector& x, std::uint64_t e) const;
  static bool is_zero(const AlgebraVector& x);
  bool is_commutative() const;
  bool is_central(const AlgebraVector& x) const;

  /// q^dim, or nullopt when it does not fit in 64 bits.
  std::optional<std::uint64_t> element_count() const;
  /// The element with the given index; coordinate 0 is the most significant digit,
  /// so increasing indices run through coordinates in lexicographic order.
  AlgebraVector element_at(std::uint64_t index) const;

  std::string format(const AlgebraVector& x) const;

 private:
  FqField field_;
  std::size_t n_;
  std::vector<std::vector<Term>> products_;
  AlgebraVector unit_;
  std::string name_;
};

/// F_q[G] with basis indexed by group element ids; the unit is delta_e.
StructureAlgebra algebra_from_group(const FiniteGroup& group, const FqField& field);

/// UGA_BUDGET from the environment if set, else 2^20.
std::uint64_t default_budget();

/// Raises BudgetExceeded unless q^dim <= budget.
void require_enumerable(const StructureAlgebra& a, std::uint64_t budget);

/// Calls f on every element in lexicographic coordinate order.
template <class F>
void for_each_element(const StructureAlgebra& a, std::uint64_t budget, F&& f) {
  require_enumerable(a, budget);
  const auto q = static_cast<FqField::code_type>(a.field().order());
  AlgebraVector x = a.zero();
  const auto total = *a.element_count();
  for (std::uint64_t index = 0; index < total; ++index) {
    f(static_cast<const AlgebraVector&>(x));
    for (std::size_t c = x.size(); c-- > 0;) {
      if (++x[c] < q) break;
      x[c] = 0;
    }
  }
}

struct AlgebraCenter {
  Subspace space;
  /// The center as an algebra on the RREF basis of `space`.
  StructureAlgebra algebra;
};

AlgebraCenter algebra_center(const StructureAlgebra& a);

/// {x : x s = 0 for all s in S}.
Subspace left_annihilator(const StructureAlgebra& a, const std::vector<AlgebraVector>& s);
/// {x : s x = 0 for all s in S}.
Subspace right_annihilator(const StructureAlgebra& a, const std::vector<AlgebraVector>& s);

bool is_left_ideal(const StructureAlgebra& a, const Subspace& l);
bool is_two_sided_ideal(const StructureAlgebra& a, const Subspace& l);
/// Span of { x * y : x in X, y in Y } over bases.
Subspace product_space(const StructureAlgebra& a, const Subspace& x, const Subspace& y);
/// The left ideal A x.
Subspace left_ideal_generated(const StructureAlgebra& a, const AlgebraVector& x);
/// The two-sided ideal A x A.
Subspace ideal_generated(const StructureAlgebra& a, const AlgebraVector& x);

}  // namespace uga
