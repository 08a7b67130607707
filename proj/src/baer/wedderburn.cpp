#include "uga/baer/wedderburn.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

#include "uga/errors.hpp"
#include "uga/scalars/numeric.hpp"
#include "uga/scalars/polynomial.hpp"

namespace uga {

namespace {

// Minimal polynomial of z in the algebra with identity e (z = z e = e z).
FqPolynomial minimal_polynomial(const StructureAlgebra& a, const AlgebraVector& z, const AlgebraVector& e) {
  const linalg::FqOps ops{a.field()};
  std::vector<AlgebraVector> powers{e};
  while (true) {
    const auto next = a.multiply(powers.back(), z);
    const auto j = powers.size();
    linalg::Rows<FqField::code_type> eqs(a.dim(), linalg::Row<FqField::code_type>(j, 0));
    for (std::size_t i = 0; i < j; ++i)
      for (std::size_t k = 0; k < a.dim(); ++k) eqs[k][i] = powers[i][k];
    if (const auto c = linalg::solve(ops, j, eqs, next)) {
      std::vector<FqField::code_type> coeffs(j + 1, 0);
      for (std::size_t i = 0; i < j; ++i) coeffs[i] = a.field().neg((*c)[i]);
      coeffs[j] = 1;
      return FqPolynomial(a.field(), coeffs);
    }
    powers.push_back(next);
  }
}

}  // namespace

std::vector<AlgebraVector> primitive_central_idempotents(const StructureAlgebra& a) {
  const auto& f = a.field();
  const auto center = algebra_center(a).space;
  const auto m = center.dim();
  const auto q = f.order();

  // Frobenius z -> z^q is F_q-linear on the commutative center.
  std::vector<AlgebraVector> images;
  for (const auto& z : center.basis()) images.push_back(a.power(z, q));
  if (Subspace(f, a.dim(), images).dim() != m)
    fail(ErrorKind::NotSemisimple, "the center of " + a.name() + " has nonzero nilpotent elements");

  // Split subalgebra B = ker(Frobenius - id).
  linalg::Rows<FqField::code_type> eqs(a.dim(), linalg::Row<FqField::code_type>(m, 0));
  for (std::size_t r = 0; r < m; ++r) {
    const auto w = a.sub(images[r], center.basis()[r]);
    for (std::size_t k = 0; k < a.dim(); ++k) eqs[k][r] = w[k];
  }
  std::vector<AlgebraVector> split_basis;
  for (const auto& c : linalg::nullspace(linalg::FqOps{f}, m, eqs)) {
    AlgebraVector b = a.zero();
    for (std::size_t r = 0; r < m; ++r)
      if (c[r] != 0) b = a.add(b, a.scale(c[r], center.basis()[r]));
    split_basis.push_back(std::move(b));
  }

  std::vector<AlgebraVector> idempotents{a.unit()};
  for (const auto& b : split_basis) {
    std::vector<AlgebraVector> refined;
    for (const auto& e : idempotents) {
      const auto z = a.multiply(b, e);
      const auto factors = factor(minimal_polynomial(a, z, e));
      if (factors.size() == 1) {
        refined.push_back(e);
        continue;
      }
      std::vector<FqField::code_type> roots;
      for (const auto& fac : factors) {
        if (fac.multiplicity != 1 || fac.poly.degree() != 1)
          fail(ErrorKind::NotSemisimple, "minimal polynomial of a split central element is not separable");
        roots.push_back(f.neg(fac.poly.code(0)));
      }
      // Lagrange idempotents prod_{k != j} (z - c_k e) / (c_j - c_k).
      for (std::size_t j = 0; j < roots.size(); ++j) {
        AlgebraVector ej = e;
        for (std::size_t k = 0; k < roots.size(); ++k) {
          if (k == j) continue;
          const auto factor_k = a.scale(f.inv(f.sub(roots[j], roots[k])), a.sub(z, a.scale(roots[k], e)));
          ej = a.multiply(ej, factor_k);
        }
        refined.push_back(std::move(ej));
      }
    }
    idempotents = std::move(refined);
  }
  std::sort(idempotents.begin(), idempotents.end());
  return idempotents;
}

WedderburnReport wedderburn_components(const StructureAlgebra& a, bool require_split) {
  const auto idempotents = primitive_central_idempotents(a);
  const auto center = algebra_center(a).space;
  WedderburnReport report{{}, a.dim()};
  std::size_t total = 0, max_degree = 1;
  for (const auto& e : idempotents) {
    std::vector<AlgebraVector> rows;
    for (std::size_t i = 0; i < a.dim(); ++i) rows.push_back(a.multiply(a.basis(i), e));
    const auto dim = Subspace(a.field(), a.dim(), rows).dim();
    rows.clear();
    for (const auto& z : center.basis()) rows.push_back(a.multiply(z, e));
    const auto degree = Subspace(a.field(), a.dim(), rows).dim();
    const auto ratio = dim / degree;
    auto n = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(ratio))));
    if (dim % degree != 0 || n * n != ratio)
      fail(ErrorKind::NonSquareDimension, "component of dimension " + std::to_string(dim) + " over a center of degree " +
                                              std::to_string(degree) + " is not a full matrix algebra");
    total += dim;
    max_degree = std::max(max_degree, degree);
    report.components.push_back({n, degree, e});
  }
  if (total != a.dim()) fail(ErrorKind::NotSemisimple, "components do not fill " + a.name());
  std::sort(report.components.begin(), report.components.end(), [](const auto& x, const auto& y) {
    return std::tie(x.matrix_size, x.degree, x.idempotent) < std::tie(y.matrix_size, y.degree, y.idempotent);
  });
  if (require_split && max_degree > 1) throw NeedsFieldExtension(static_cast<unsigned>(max_degree));
  return report;
}

std::optional<std::size_t> nilpotency_index(const StructureAlgebra& a, const Subspace& ideal) {
  Subspace power = ideal;
  std::size_t k = 1;
  while (power.dim() > 0) {
    auto next = product_space(a, power, ideal);
    if (next == power) return std::nullopt;
    power = std::move(next);
    ++k;
  }
  return k;
}

std::optional<NilpotentIdeal> nilpotent_ideal_bruteforce(const StructureAlgebra& a, std::uint64_t budget) {
  Subspace radical(a.field(), a.dim());
  for_each_element(a, budget, [&](const AlgebraVector& x) {
    if (StructureAlgebra::is_zero(x) || radical.contains(x)) return;
    if (!StructureAlgebra::is_zero(a.power(x, a.dim()))) return;
    const auto ideal = ideal_generated(a, x);
    if (nilpotency_index(a, ideal)) radical = radical.sum(ideal);
  });
  if (radical.dim() == 0) return std::nullopt;
  const auto index = nilpotency_index(a, radical);
  if (!index) fail(ErrorKind::InvalidArgument, "sum of nilpotent ideals is not nilpotent");
  return NilpotentIdeal{radical, *index};
}

bool maschke_predict(const FiniteGroup& group, std::uint32_t p) {
  if (!is_prime(p)) fail(ErrorKind::InvalidArgument, std::to_string(p) + " is not prime");
  return group.order() % p != 0;
}

GroupPipelineReport group_baer_pipeline(const FiniteGroupPtr& group, std::uint32_t p, unsigned k,
                                        const LatticeOptions& options) {
  const auto field = FqField::extension(p, k);
  const auto a = algebra_from_group(*group, field);
  GroupPipelineReport r;
  r.algebra = a.name();
  r.group_order = group->order();
  r.p = p;
  r.k = k;
  r.class_count = groups::conjugacy_classes(*group).size();
  r.center_dimension = algebra_center(a).space.dim();
  r.maschke_semisimple = maschke_predict(*group, p);
  const auto count = a.element_count();
  const bool enumerable = count && *count <= options.budget;
  if (enumerable) r.radical = nilpotent_ideal_bruteforce(a, options.budget);
  r.semisimple = enumerable ? !r.radical.has_value() : r.maschke_semisimple;
  if (r.semisimple) r.wedderburn = wedderburn_components(a);
  r.baer = is_baer(a, options);
  if (r.baer.is_baer && enumerable) r.kaplansky = kaplansky_type(a, r.baer, options.budget);

  std::string v = r.semisimple ? "semisimple" : "not semisimple";
  if (!r.semisimple && r.radical)
    v += " (radical of dimension " + std::to_string(r.radical->ideal.dim()) + ", nilpotency index " +
         std::to_string(r.radical->index) + ")";
  v += r.baer.is_baer ? "; Baer" : "; not Baer";
  if (!r.baer.exhaustive) v += " (sampled)";
  if (r.kaplansky)
    v += std::string("; type ") + to_string(r.kaplansky->type) + (r.kaplansky->finite ? " finite" : " infinite");
  r.verdict = v;
  return r;
}

}  // namespace uga
