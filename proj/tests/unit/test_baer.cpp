#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <tuple>

#include "doctest.h"
#include "test_support.hpp"
#include "uga/baer/algebra.hpp"
#include "uga/baer/baer.hpp"
#include "uga/baer/wedderburn.hpp"
#include "uga/group_algebra/reduction.hpp"

using namespace uga;
using V = AlgebraVector;

namespace {

constexpr std::uint64_t kBudget = std::uint64_t{1} << 20;

std::vector<V> all_elements(const StructureAlgebra& a) {
  std::vector<V> out;
  for (std::uint64_t i = 0; i < *a.element_count(); ++i) out.push_back(a.element_at(i));
  return out;
}

// {y : y x = 0} by scanning every y.
std::set<V> brute_left_annihilator(const StructureAlgebra& a, const std::vector<V>& elements, const V& x) {
  std::set<V> out;
  for (const auto& y : elements)
    if (StructureAlgebra::is_zero(a.multiply(y, x))) out.insert(y);
  return out;
}

std::set<V> members_of(const StructureAlgebra& a, const std::vector<V>& elements, const Subspace& s) {
  std::set<V> out;
  for (const auto& y : elements)
    if (s.contains(y)) out.insert(y);
  return out;
}

std::vector<V> brute_idempotents(const StructureAlgebra& a) {
  std::vector<V> out;
  for (const auto& x : all_elements(a))
    if (a.multiply(x, x) == x) out.push_back(x);
  return out;
}

std::vector<FiniteGroupPtr> groups_up_to_8() {
  const auto c2 = groups::cyclic(2), c4 = groups::cyclic(4);
  return {groups::trivial(),      groups::cyclic(2),
          groups::cyclic(3),      groups::cyclic(4),
          groups::cyclic(5),      groups::cyclic(6),
          groups::cyclic(7),      groups::cyclic(8),
          groups::direct_product(*c2, *c2),
          groups::direct_product(*c4, *c2),
          groups::direct_product(*groups::direct_product(*c2, *c2), *c2),
          groups::symmetric(3),   groups::dihedral(4),
          groups::quaternion()};
}

bool a_corner_is_commutative(const StructureAlgebra& a, const V& e) {
  std::vector<V> corner;
  for (std::size_t i = 0; i < a.dim(); ++i) corner.push_back(a.multiply(a.multiply(e, a.basis(i)), e));
  for (const auto& x : corner)
    for (const auto& y : corner)
      if (a.multiply(x, y) != a.multiply(y, x)) return false;
  return true;
}

// The central support of e is below every central idempotent fixing e.
bool is_central_support(const StructureAlgebra& a, const std::vector<V>& idempotents, const IdempotentInfo& info) {
  const auto& v = info.central_support;
  if (!a.is_central(v) || a.multiply(v, info.element) != info.element) return false;
  for (const auto& w : idempotents)
    if (a.is_central(w) && a.multiply(w, info.element) == info.element && a.multiply(w, v) != v) return false;
  return true;
}

const V t_minus_1{2, 1, 0};
const V t_minus_1_sq{1, 1, 1};

}  // namespace

TEST_CASE("group algebras as structure algebras") {
  const auto s3 = groups::symmetric(3);
  const auto f5 = FqField::prime(5);
  const auto a = algebra_from_group(*s3, f5);
  CHECK(a.dim() == 6);
  CHECK(a.unit() == a.basis(0));
  CHECK_FALSE(a.is_commutative());
  std::mt19937_64 rng(1);
  for (int t = 0; t < 200; ++t) {
    const auto x = testing::random_fq_element(rng, s3, f5);
    const auto y = testing::random_fq_element(rng, s3, f5);
    V vx(6), vy(6);
    for (FiniteGroup::element_type g = 0; g < 6; ++g) vx[g] = x.coefficient(g).code(), vy[g] = y.coefficient(g).code();
    const auto xy = x * y;
    V expected(6);
    for (FiniteGroup::element_type g = 0; g < 6; ++g) expected[g] = xy.coefficient(g).code();
    CHECK(a.multiply(vx, vy) == expected);
  }
  const auto c3 = algebra_from_group(*groups::cyclic(3), FqField::prime(2));
  CHECK(c3.dim() == 3);
  CHECK(c3.is_commutative());
}

TEST_CASE("structure constants are validated") {
  const auto f3 = FqField::prime(3);
  using T = StructureAlgebra::Term;
  // 1, x, y with x^2 = y, y^2 = x, xy = yx = 0: not associative.
  std::vector<std::vector<T>> p(9);
  for (std::uint32_t i = 0; i < 3; ++i) p[i] = {{i, 1}}, p[i * 3] = {{i, 1}};
  p[4] = {{2, 1}};
  p[8] = {{1, 1}};
  CHECK_THROWS_AS(StructureAlgebra(f3, 3, p, V{1, 0, 0}), Error);
  p[4] = {};
  p[8] = {};
  CHECK_NOTHROW(StructureAlgebra(f3, 3, p, V{1, 0, 0}));
  CHECK_THROWS_AS(StructureAlgebra(f3, 3, p, V{0, 1, 0}), Error);
}

TEST_CASE("left annihilators") {
  const auto f3 = FqField::prime(3);
  const auto a = algebra_from_group(*groups::cyclic(3), f3);
  CHECK(left_annihilator(a, {a.unit()}).dim() == 0);
  CHECK(left_annihilator(a, {a.zero()}).dim() == 3);
  CHECK(left_annihilator(a, {}).dim() == 3);
  const auto ann = left_annihilator(a, {t_minus_1_sq});
  CHECK(ann == Subspace(f3, 3, {t_minus_1, t_minus_1_sq}));
  CHECK(is_left_ideal(a, ann));

  const auto elements = all_elements(a);
  for (const auto& x : elements)
    CHECK(members_of(a, elements, left_annihilator(a, {x})) == brute_left_annihilator(a, elements, x));
  const auto s3 = algebra_from_group(*groups::symmetric(3), FqField::prime(2));
  const auto s3_elements = all_elements(s3);
  for (const auto& x : s3_elements)
    CHECK(members_of(s3, s3_elements, left_annihilator(s3, {x})) == brute_left_annihilator(s3, s3_elements, x));
}

TEST_CASE("annihilator duality") {
  for (const auto& a : {algebra_from_group(*groups::cyclic(3), FqField::prime(3)),
                        algebra_from_group(*groups::cyclic(2), FqField::prime(5)),
                        algebra_from_group(*groups::symmetric(3), FqField::prime(2))}) {
    for (const auto& x : all_elements(a)) {
      const auto l = left_annihilator(a, {x});
      CHECK(left_annihilator(a, right_annihilator(a, l.basis()).basis()) == l);
    }
  }
}

TEST_CASE("annihilator lattices") {
  const auto c2 = algebra_from_group(*groups::cyclic(2), FqField::prime(5));
  const auto lattice = annihilator_lattice(c2);
  CHECK(lattice.exhaustive);
  CHECK(lattice.members.size() == 4);
  // Oracle: every element's annihilator by scanning, closed under intersection.
  const auto elements = all_elements(c2);
  std::set<std::set<V>> brute;
  for (const auto& x : elements) brute.insert(brute_left_annihilator(c2, elements, x));
  std::set<std::set<V>> closed = brute;
  for (const auto& s : brute)
    for (const auto& t : brute) {
      std::set<V> both;
      std::set_intersection(s.begin(), s.end(), t.begin(), t.end(), std::inserter(both, both.begin()));
      closed.insert(both);
    }
  std::set<std::set<V>> computed;
  for (const auto& m : lattice.members) computed.insert(members_of(c2, elements, m));
  CHECK(computed == closed);

  const auto c3 = algebra_from_group(*groups::cyclic(3), FqField::prime(3));
  const auto l3 = annihilator_lattice(c3);
  CHECK(std::find(l3.members.begin(), l3.members.end(), Subspace(c3.field(), 3, {t_minus_1, t_minus_1_sq})) !=
        l3.members.end());
  CHECK(l3.members.size() == 4);

  const auto field = algebra_from_group(*groups::trivial(), FqField::prime(7));
  CHECK(annihilator_lattice(field).members.size() == 2);

  const auto big = algebra_from_group(*groups::symmetric(3), FqField::prime(5));
  CHECK_THROWS_AS(annihilator_lattice(big, {1000}), BudgetExceeded);
  const auto sampled = annihilator_lattice(big, {1000, 50});
  CHECK_FALSE(sampled.exhaustive);
  CHECK(sampled.elements_scanned == 50);
}

TEST_CASE("idempotent generators") {
  const auto a = algebra_from_group(*groups::symmetric(3), FqField::prime(5));
  const auto lattice = annihilator_lattice(a);
  for (const auto& l : lattice.members) {
    const auto e = idempotent_generator(a, l);
    REQUIRE(e.has_value());
    CHECK(a.multiply(*e, *e) == *e);
    CHECK(left_ideal_generated(a, *e) == l);
  }
  for (const auto& e : brute_idempotents(algebra_from_group(*groups::cyclic(2), FqField::prime(5)))) {
    const auto c2 = algebra_from_group(*groups::cyclic(2), FqField::prime(5));
    const auto l = left_ideal_generated(c2, e);
    const auto g = idempotent_generator(c2, l);
    REQUIRE(g.has_value());
    CHECK(left_ideal_generated(c2, *g) == l);
  }
  const auto c3 = algebra_from_group(*groups::cyclic(3), FqField::prime(3));
  CHECK_FALSE(idempotent_generator(c3, Subspace(c3.field(), 3, {t_minus_1, t_minus_1_sq})).has_value());
  CHECK(idempotent_generator(c3, Subspace(c3.field(), 3)) == c3.zero());
  CHECK_THROWS_AS(idempotent_generator(a, Subspace(a.field(), 6, {a.basis(1)})), Error);
}

TEST_CASE("Baer verdicts") {
  const auto s3 = algebra_from_group(*groups::symmetric(3), FqField::prime(5));
  CHECK(is_baer(s3).is_baer);
  const auto c3 = algebra_from_group(*groups::cyclic(3), FqField::prime(3));
  const auto v = is_baer(c3);
  CHECK_FALSE(v.is_baer);
  REQUIRE(v.witness.has_value());
  CHECK(*v.witness == Subspace(c3.field(), 3, {t_minus_1, t_minus_1_sq}));
  CHECK(is_baer(algebra_from_group(*groups::trivial(), FqField::extension(2, 3))).is_baer);
}

TEST_CASE("idempotent enumeration") {
  const auto c3 = algebra_from_group(*groups::cyclic(3), FqField::prime(3));
  const auto ids = enumerate_idempotents(c3, kBudget);
  REQUIRE(ids.size() == 2);
  CHECK(ids[0].element == c3.zero());
  CHECK(ids[1].element == c3.unit());

  const auto c2 = algebra_from_group(*groups::cyclic(2), FqField::prime(5));
  const auto ids2 = enumerate_idempotents(c2, kBudget);
  CHECK(ids2.size() == 4);
  std::set<V> found;
  for (const auto& info : ids2) {
    CHECK(info.is_central);
    CHECK(info.is_abelian);
    CHECK(info.is_finite);
    found.insert(info.element);
  }
  // e_+- = (1 +- g) / 2 with 1/2 = 3 in F_5.
  CHECK(found == std::set<V>{{0, 0}, {1, 0}, {3, 3}, {3, 2}});

  const auto s3 = algebra_from_group(*groups::symmetric(3), FqField::prime(5));
  const auto ids3 = enumerate_idempotents(s3, kBudget);
  std::vector<V> elements;
  for (const auto& info : ids3) elements.push_back(info.element);
  CHECK(elements == brute_idempotents(s3));
  // F5 + F5 + M_2(F5): 2 * 2 * (2 + 5 * 6) idempotents.
  CHECK(ids3.size() == 128);
  for (const auto& info : ids3) CHECK(is_central_support(s3, elements, info));
  // The unit corner is the whole algebra; the scan of xy = 1 runs exhaustively.
  const auto unit = std::find_if(ids3.begin(), ids3.end(), [&](const auto& i) { return i.element == s3.unit(); });
  REQUIRE(unit != ids3.end());
  CHECK(unit->is_finite);
  CHECK(unit->finite_checked_exhaustively);
  CHECK_FALSE(unit->is_abelian);
  CHECK(unit->is_faithful);
}

TEST_CASE("Kaplansky type") {
  const auto s3 = algebra_from_group(*groups::symmetric(3), FqField::prime(5));
  const auto report = kaplansky_type(s3);
  CHECK(report.type == KaplanskyType::I);
  CHECK(report.finite);
  REQUIRE(report.certificate.has_value());
  const auto& e = *report.certificate;
  CHECK(a_corner_is_commutative(s3, e));
  const auto ids = brute_idempotents(s3);
  for (const auto& w : ids)
    if (s3.is_central(w) && s3.multiply(w, e) == e) CHECK(w == s3.unit());

  const auto c3 = algebra_from_group(*groups::cyclic(3), FqField::prime(2));
  const auto r3 = kaplansky_type(c3);
  CHECK(r3.type == KaplanskyType::I);
  CHECK(r3.certificate == c3.unit());

  const auto field = algebra_from_group(*groups::trivial(), FqField::prime(7));
  CHECK(kaplansky_type(field).certificate == field.unit());

  CHECK_THROWS_AS(kaplansky_type(algebra_from_group(*groups::cyclic(3), FqField::prime(3))), Error);
}

TEST_CASE("centers") {
  const auto f5 = FqField::prime(5);
  for (const auto& [g, f, classes] : std::vector<std::tuple<FiniteGroupPtr, FqField, std::size_t>>{
           {groups::symmetric(3), f5, 3}, {groups::dihedral(4), FqField::prime(3), 5}, {groups::quaternion(), f5, 5}}) {
    const auto a = algebra_from_group(*g, f);
    const auto z = algebra_center(a);
    CHECK(z.space.dim() == classes);
    CHECK(z.algebra.is_commutative());
    for (const auto& sum : center_class_sums(g, f)) {
      V v(g->order());
      for (FiniteGroup::element_type x = 0; x < g->order(); ++x) v[x] = sum.coefficient(x).code();
      CHECK(z.space.contains(v));
    }
  }
  const auto c4 = algebra_from_group(*groups::cyclic(4), f5);
  CHECK(algebra_center(c4).space.dim() == 4);
}

TEST_CASE("primitive central idempotents") {
  const auto s3 = algebra_from_group(*groups::symmetric(3), FqField::prime(5));
  const auto pci = primitive_central_idempotents(s3);
  CHECK(pci.size() == 3);
  // Oracle: scan the 125 central elements for minimal nonzero central idempotents.
  const auto center = algebra_center(s3).space;
  std::vector<V> central_ids;
  std::vector<FqField::code_type> c(3, 0);
  for (int i = 0; i < 125; ++i) {
    c = {static_cast<FqField::code_type>(i / 25), static_cast<FqField::code_type>(i / 5 % 5),
         static_cast<FqField::code_type>(i % 5)};
    V x = s3.zero();
    for (int r = 0; r < 3; ++r) x = s3.add(x, s3.scale(c[r], center.basis()[r]));
    if (!StructureAlgebra::is_zero(x) && s3.multiply(x, x) == x) central_ids.push_back(x);
  }
  std::vector<V> primitive;
  for (const auto& e : central_ids) {
    bool minimal = true;
    for (const auto& f : central_ids)
      if (f != e && s3.multiply(e, f) == f) minimal = false;
    if (minimal) primitive.push_back(e);
  }
  std::sort(primitive.begin(), primitive.end());
  CHECK(pci == primitive);

  for (const auto& a : {s3, algebra_from_group(*groups::cyclic(3), FqField::prime(2)),
                        algebra_from_group(*groups::quaternion(), FqField::prime(3))}) {
    const auto ids = primitive_central_idempotents(a);
    V total = a.zero();
    for (std::size_t i = 0; i < ids.size(); ++i) {
      CHECK(a.is_central(ids[i]));
      CHECK(a.multiply(ids[i], ids[i]) == ids[i]);
      for (std::size_t j = 0; j < ids.size(); ++j)
        if (i != j) CHECK(StructureAlgebra::is_zero(a.multiply(ids[i], ids[j])));
      total = a.add(total, ids[i]);
    }
    CHECK(total == a.unit());
  }
  CHECK(primitive_central_idempotents(algebra_from_group(*groups::cyclic(3), FqField::prime(2))).size() == 2);
  const auto field = algebra_from_group(*groups::trivial(), FqField::prime(7));
  CHECK(primitive_central_idempotents(field) == std::vector<V>{field.unit()});
  CHECK_THROWS_AS(primitive_central_idempotents(algebra_from_group(*groups::cyclic(3), FqField::prime(3))), Error);
}

TEST_CASE("Wedderburn components") {
  auto shape = [](const WedderburnReport& r) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (const auto& c : r.components) out.emplace_back(c.matrix_size, c.degree);
    return out;
  };
  using P = std::vector<std::pair<std::size_t, std::size_t>>;
  CHECK(shape(wedderburn_components(algebra_from_group(*groups::symmetric(3), FqField::prime(5)))) ==
        P{{1, 1}, {1, 1}, {2, 1}});
  const auto c3 = algebra_from_group(*groups::cyclic(3), FqField::prime(2));
  CHECK(shape(wedderburn_components(c3)) == P{{1, 1}, {1, 2}});
  try {
    wedderburn_components(c3, true);
    FAIL("expected a field extension request");
  } catch (const NeedsFieldExtension& e) {
    CHECK(e.degree() == 2);
  }
  // Over F_4 the degree-2 block splits.
  CHECK(shape(wedderburn_components(algebra_from_group(*groups::cyclic(3), FqField::extension(2, 2)))) ==
        P{{1, 1}, {1, 1}, {1, 1}});
  CHECK(shape(wedderburn_components(algebra_from_group(*groups::trivial(), FqField::prime(7)))) == P{{1, 1}});
  CHECK(shape(wedderburn_components(algebra_from_group(*groups::quaternion(), FqField::prime(3)))) ==
        P{{1, 1}, {1, 1}, {1, 1}, {1, 1}, {2, 1}});
  for (const auto& g : groups_up_to_8())
    for (std::uint32_t p : {3u, 5u, 7u}) {
      if (g->order() % p == 0) continue;
      const auto r = wedderburn_components(algebra_from_group(*g, FqField::prime(p)));
      std::size_t total = 0;
      for (const auto& c : r.components) total += c.matrix_size * c.matrix_size * c.degree;
      CHECK(total == g->order());
    }
  CHECK_THROWS_AS(wedderburn_components(algebra_from_group(*groups::cyclic(3), FqField::prime(3))), Error);
}

TEST_CASE("nilpotent ideals") {
  const auto c3 = algebra_from_group(*groups::cyclic(3), FqField::prime(3));
  const auto rad = nilpotent_ideal_bruteforce(c3, kBudget);
  REQUIRE(rad.has_value());
  CHECK(rad->ideal == Subspace(c3.field(), 3, {t_minus_1, t_minus_1_sq}));
  CHECK(rad->index == 3);
  CHECK_FALSE(nilpotent_ideal_bruteforce(algebra_from_group(*groups::symmetric(3), FqField::prime(5)), kBudget));
  CHECK_FALSE(nilpotent_ideal_bruteforce(algebra_from_group(*groups::trivial(), FqField::prime(5)), kBudget));
  const auto c2 = algebra_from_group(*groups::cyclic(2), FqField::prime(2));
  const auto rad2 = nilpotent_ideal_bruteforce(c2, kBudget);
  REQUIRE(rad2.has_value());
  CHECK(rad2->ideal == Subspace(c2.field(), 2, {V{1, 1}}));
  CHECK(rad2->index == 2);
  CHECK_THROWS_AS(nilpotent_ideal_bruteforce(algebra_from_group(*groups::symmetric(3), FqField::prime(5)), 100),
                  BudgetExceeded);
}

TEST_CASE("Maschke prediction agrees with the radical search") {
  CHECK(maschke_predict(*groups::symmetric(3), 5));
  CHECK_FALSE(maschke_predict(*groups::cyclic(3), 3));
  CHECK(maschke_predict(*groups::dihedral(4), 3));
  for (const auto& g : groups_up_to_8())
    for (std::uint32_t p : {2u, 3u}) {
      const auto rad = nilpotent_ideal_bruteforce(algebra_from_group(*g, FqField::prime(p)), kBudget);
      CHECK_MESSAGE(maschke_predict(*g, p) == !rad.has_value(), g->name() << " over F_" << p);
    }
}

TEST_CASE("group pipeline") {
  const auto s3 = group_baer_pipeline(groups::symmetric(3), 5, 1);
  CHECK(s3.semisimple);
  CHECK(s3.maschke_semisimple);
  CHECK(s3.baer.is_baer);
  REQUIRE(s3.kaplansky.has_value());
  CHECK(s3.kaplansky->type == KaplanskyType::I);
  CHECK(s3.kaplansky->finite);
  CHECK(s3.class_count == 3);
  CHECK(s3.center_dimension == 3);

  const auto c3 = group_baer_pipeline(groups::cyclic(3), 3, 1);
  CHECK_FALSE(c3.semisimple);
  CHECK_FALSE(c3.baer.is_baer);
  CHECK_FALSE(c3.kaplansky.has_value());
  REQUIRE(c3.radical.has_value());
  CHECK(c3.radical->ideal.dim() == 2);

  const auto c2 = group_baer_pipeline(groups::cyclic(2), 2, 1);
  CHECK_FALSE(c2.semisimple);
  REQUIRE(c2.radical.has_value());
  CHECK(c2.radical->ideal == Subspace(FqField::prime(2), 2, {V{1, 1}}));
}
