// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <algorithm>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "../unit/test_support.hpp"
#include "uga/baer/algebra.hpp"
#include "uga/baer/baer.hpp"
#include "uga/baer/wedderburn.hpp"
#include "uga/group_algebra/reduction.hpp"
#include "uga/groups/conjugacy.hpp"
#include "uga/operators/commutant.hpp"
#include "uga/operators/convergence.hpp"
#include "uga/operators/regular.hpp"

using namespace uga;
using Id = FiniteGroup::element_type;
using V = AlgebraVector;

namespace {

struct Check {
  bool ok = true;
  std::ostringstream detail;

  void require(bool condition, const std::string& what) {
    if (!condition && ok) {
      ok = false;
      detail.str("");
      detail << "failed: " << what;
    }
  }
};

std::vector<FiniteGroupPtr> relation_groups() { return {groups::cyclic(4), groups::symmetric(3), groups::dihedral(4)}; }

Check relations_suite() {
  Check c;
  std::size_t total = 0;
  for (const auto& g : relation_groups()) {
    const auto r = check_relations(g);
    c.require(r.holds, g->name() + ": " + r.first_violation.value_or(""));
    total += r.identities_checked;
  }
  if (c.ok) c.detail << total << " exact identities over C4, S3, D4";
  return c;
}

Check commutant_span() {
  Check c;
  for (const auto& g : relation_groups()) {
    const auto n = g->order();
    std::vector<OperatorMatrix<RationalField>> u, profiles;
    for (Id h = 0; h < n; ++h) {
      u.push_back(regular_representation(g, h, Action::Right));
      profiles.push_back(
          matrix_of(GroupAlgebraElement<FiniteGroup, RationalField>::delta(g, {}, h), Side::RightCommutant));
    }
    const auto comm = commutant(u);
    c.require(comm.size() == n, g->name() + ": commutant dimension " + std::to_string(comm.size()));
    for (const auto& m : comm)
      c.require(std::holds_alternative<DiagonalProfile<RationalField>>(diagonal_profile(m, Side::RightCommutant)),
                g->name() + ": commutant member not diagonal-constant");
    for (const auto& m : profiles) c.require(commutes_with_all(m, u), g->name() + ": profile matrix outside commutant");
    c.require(matrix_span(RationalField{}, n, comm) == matrix_span(RationalField{}, n, profiles),
              g->name() + ": subspaces differ");
    const auto double_comm = commutant(comm);
    c.require(double_comm.size() == n, g->name() + ": double commutant dimension " + std::to_string(double_comm.size()));
  }
  if (c.ok) c.detail << "dim commutant = dim double commutant = |G| for C4, S3, D4; subspaces coincide";
  return c;
}

Check homomorphism() {
  Check c;
  const auto s3 = groups::symmetric(3);
  std::mt19937_64 rng(2024);
  const auto f7 = FqField::prime(7);
  for (int t = 0; t < 300; ++t) {
    const auto x = testing::random_fq_element(rng, s3, f7), y = testing::random_fq_element(rng, s3, f7);
    c.require(matrix_of(x * y, Side::LeftCommutant) == matrix_of(x, Side::LeftCommutant) * matrix_of(y, Side::LeftCommutant),
              "F7[S3] pair " + std::to_string(t));
  }
  const PadicField q5{5, 20};
  for (int t = 0; t < 300; ++t) {
    const auto x = testing::random_padic_element(rng, s3, q5), y = testing::random_padic_element(rng, s3, q5);
    c.require(matrix_of(x * y, Side::LeftCommutant) == matrix_of(x, Side::LeftCommutant) * matrix_of(y, Side::LeftCommutant),
              "Q5[S3] pair " + std::to_string(t));
  }
  for (int t = 0; t < 500; ++t) {
    const auto x = testing::random_padic_element(rng, s3, q5), y = testing::random_padic_element(rng, s3, q5);
    c.require(reduce(x * y) == reduce(x) * reduce(y), "reduction pair " + std::to_string(t));
  }
  if (c.ok) c.detail << "300 F7[S3] pairs, 300 unit-ball Q5[S3] pairs, 500 reduction pairs";
  return c;
}

Check convergence_checker() {
  Check c;
  for (const auto& name : convergence_scenarios()) {
    const auto r = strong_convergence_check(convergence_scenario(name));
    c.require(r.probes_agree, name + ": probe verdict disagrees");
    if (name == "unbounded-growth") {
      c.require(r.verdict == ConvergenceVerdict::FailsBound, name + ": expected FailsBound");
      const auto& decay = r.probes.back();
      c.require(decay.name == "decay" && !decay.within_threshold, name + ": decay probe did not diverge");
      for (const auto& [l, norm] : decay.norms) {
        const auto li = static_cast<std::int64_t>(l);
        c.require(norm == rational_power(5, li - (li + 1) / 2), name + ": probe norm at stage " + std::to_string(l));
      }
    } else {
      c.require(r.verdict == ConvergenceVerdict::ConvergesEvidence, name + ": expected ConvergesEvidence");
    }
  }
  if (c.ok) c.detail << "scalar-decay, column-shift accepted; unbounded-growth rejected by the bound, probe norms 5^(l-ceil(l/2))";
  return c;
}

Check factor_criterion() {
  Check c;
  const auto dinf = GroupFamily::infinite_dihedral();
  const auto r = icc_check(dinf, {dinf.parse("r")}, 1000).front();
  c.require(r.orbit.finite && r.class_size == 2, "infinite dihedral: class of r");
  const auto f2 = GroupFamily::free(2);
  for (const auto* p : {"a", "b"}) {
    const auto v = icc_check(f2, {f2.parse(p)}, 1000).front();
    c.require(!v.orbit.finite && v.certified_at_least && v.bound >= 1000, std::string("free group probe ") + p);
  }
  c.require(f2.has_icc_proof(), "free group ICC flag");
  const auto z = GroupFamily::free_abelian(1);
  const auto zv = icc_check(z, z.generators(), 1000).front();
  c.require(zv.orbit.finite && zv.class_size == 1, "free abelian rank 1");
  const auto s3 = groups::symmetric(3), d4 = groups::dihedral(4);
  const auto zs3 = algebra_center(algebra_from_group(*s3, FqField::prime(5))).space.dim();
  const auto zd4 = algebra_center(algebra_from_group(*d4, FqField::prime(3))).space.dim();
  c.require(zs3 == 3 && groups::conjugacy_classes(*s3).size() == 3, "S3 center dimension");
  c.require(zd4 == 5 && groups::conjugacy_classes(*d4).size() == 5, "D4 center dimension");
  if (c.ok) c.detail << "D_inf class of r = 2 (not a factor); F2 classes >= 1000; Z not a factor; centers 3 and 5";
  return c;
}

bool corner_commutative(const StructureAlgebra& a, const V& e) {
  std::vector<V> corner;
  for (std::size_t i = 0; i < a.dim(); ++i) corner.push_back(a.multiply(a.multiply(e, a.basis(i)), e));
  for (const auto& x : corner)
    for (const auto& y : corner)
      if (a.multiply(x, y) != a.multiply(y, x)) return false;
  return true;
}

std::string shape(const WedderburnReport& w) {
  std::string s = "[";
  for (std::size_t i = 0; i < w.components.size(); ++i)
    s += (i ? ",(" : "(") + std::to_string(w.components[i].matrix_size) + "," + std::to_string(w.components[i].degree) + ")";
  return s + "]";
}

Check semisimple_pipeline() {
  Check c;
  const auto a = algebra_from_group(*groups::symmetric(3), FqField::prime(5));
  c.require(!nilpotent_ideal_bruteforce(a, default_budget()).has_value(), "F5[S3] has a nilpotent ideal");
  const auto w = wedderburn_components(a);
  c.require(shape(w) == "[(1,1),(1,1),(2,1)]", "F5[S3] components " + shape(w));
  std::size_t sum = 0;
  for (const auto& comp : w.components) sum += comp.matrix_size * comp.matrix_size * comp.degree;
  c.require(sum == 6, "dimension sum");
  const auto report = kaplansky_type(a, LatticeOptions{default_budget()});
  c.require(report.baer.is_baer && report.baer.exhaustive, "F5[S3] Baer");
  c.require(report.type == KaplanskyType::I && report.finite, "F5[S3] type I finite");
  c.require(report.certificate.has_value(), "certificate present");
  if (report.certificate) {
    const auto& e = *report.certificate;
    c.require(a.multiply(e, e) == e, "certificate idempotent");
    c.require(corner_commutative(a, e), "certificate corner commutative");
    for (std::uint64_t i = 0; i < *a.element_count(); ++i) {
      const auto v = a.element_at(i);
      if (a.multiply(v, v) == v && a.is_central(v) && a.multiply(v, e) == e)
        c.require(v == a.unit(), "certificate not faithful");
    }
  }
  const auto w2 = wedderburn_components(algebra_from_group(*groups::cyclic(3), FqField::prime(2)));
  c.require(shape(w2) == "[(1,1),(1,2)]", "F2[C3] components " + shape(w2));
  if (c.ok)
    c.detail << "F5[S3]: " << shape(w) << " 1+1+4=6, Baer, type I finite, certificate " << a.format(*report.certificate)
             << "; F2[C3]: " << shape(w2);
  return c;
}

Check negative_control() {
  Check c;
  const auto a = algebra_from_group(*groups::cyclic(3), FqField::prime(3));
  const Subspace witness(a.field(), 3, {V{2, 1, 0}, V{1, 1, 1}});  // (t-1), (t-1)^2
  const auto rad = nilpotent_ideal_bruteforce(a, default_budget());
  c.require(rad.has_value() && rad->ideal.dim() == 2 && rad->index == 3, "radical of dimension 2, index 3");
  const auto v = is_baer(a, LatticeOptions{default_budget()});
  c.require(!v.is_baer && v.witness && *v.witness == witness, "Baer witness");
  c.require(!idempotent_generator(a, witness).has_value(), "witness has an idempotent generator");
  std::vector<V> idempotents;
  for (std::uint64_t i = 0; i < 27; ++i) {
    const auto x = a.element_at(i);
    if (a.multiply(x, x) == x) idempotents.push_back(x);
  }
  c.require(idempotents == std::vector<V>{a.zero(), a.unit()}, "idempotents are exactly 0 and 1");
  if (c.ok) c.detail << "F3[C3]: radical dim 2 index 3, not Baer, witness span{t-1,(t-1)^2}, idempotents {0,1}";
  return c;
}

Check orthonormality() {
  Check c;
  const auto s3 = groups::symmetric(3);
  const PadicField q5{5, 20};
  std::vector<PadicGroupAlgebra> basis;
  for (Id g = 0; g < 6; ++g) basis.push_back(PadicGroupAlgebra::delta(s3, q5, g));
  const auto std_basis = orthonormality_test(basis);
  c.require(std_basis.orthonormal && std_basis.reduction_rank == 6, "standard basis");
  const auto e = PadicGroupAlgebra::unit(s3, q5), dg = PadicGroupAlgebra::delta(s3, q5, 1);
  const auto perturbed = e + dg.scaled(q5.from_int(5));
  const auto independent = orthonormality_test({perturbed, dg});
  c.require(independent.orthonormal && independent.reduction_rank == 2, "perturbed independent pair");
  const auto dependent = orthonormality_test({e, perturbed});
  c.require(!dependent.orthonormal && dependent.reduction_rank == 1, "reduction-dependent pair");
  if (c.ok) c.detail << "ranks 6, 2, 1: orthonormal, orthonormal, not orthonormal";
  return c;
}

Check maschke_agreement() {
  Check c;
  const auto c2 = groups::cyclic(2), c4 = groups::cyclic(4);
  const auto k4 = groups::direct_product(*c2, *c2);
  const std::vector<FiniteGroupPtr> gs{groups::trivial(), c2, groups::cyclic(3), c4, groups::cyclic(5),
                                       groups::cyclic(6), groups::cyclic(7), groups::cyclic(8), k4,
                                       groups::direct_product(*c4, *c2), groups::direct_product(*k4, *c2),
                                       groups::symmetric(3), groups::dihedral(4), groups::quaternion()};
  std::size_t instances = 0;
  for (const auto& g : gs)
    for (std::uint32_t p : {2u, 3u}) {
      const auto rad = nilpotent_ideal_bruteforce(algebra_from_group(*g, FqField::prime(p)), default_budget());
      c.require(maschke_predict(*g, p) == !rad.has_value(), g->name() + " over F_" + std::to_string(p));
      ++instances;
    }
  if (c.ok) c.detail << instances << " instances (" << gs.size() << " groups of order <= 8, p = 2, 3)";
  return c;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Check()>>> criteria{
      {"representation relations", relations_suite},
      {"commutant equals diagonal-constant matrices", commutant_span},
      {"matrix_of and reduction are multiplicative", homomorphism},
      {"strong convergence checker", convergence_checker},
      {"factor criterion and centers", factor_criterion},
      {"semisimple pipeline", semisimple_pipeline},
      {"non-semisimple control", negative_control},
      {"orthonormality by reduction", orthonormality},
      {"Maschke agreement", maschke_agreement},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Check c;
    try {
      c = run();
    } catch (const std::exception& e) {
      c.ok = false;
      c.detail.str(std::string("exception: ") + e.what());
    }
    std::cout << (c.ok ? "PASS  " : "FAIL  ") << name << ": " << c.detail.str() << '\n';
    failed += c.ok ? 0 : 1;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
