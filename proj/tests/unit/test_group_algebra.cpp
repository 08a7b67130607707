#include <random>

#include "doctest.h"
#include "test_support.hpp"
#include "uga/group_algebra/element.hpp"
#include "uga/group_algebra/reduction.hpp"
#include "uga/linalg.hpp"

using namespace uga;
using uga::testing::random_fq_element;
using uga::testing::random_padic_element;
using Id = FiniteGroup::element_type;

namespace {

// Dense evaluation of (x y)_d = sum_l x_l y_{l^-1 d}, independent of operator*.
template <class Domain>
GroupAlgebraElement<FiniteGroup, Domain> brute_convolve(const GroupAlgebraElement<FiniteGroup, Domain>& x,
                                                        const GroupAlgebraElement<FiniteGroup, Domain>& y) {
  const auto& g = x.group();
  GroupAlgebraElement<FiniteGroup, Domain> out(x.group_ptr(), x.domain());
  for (Id d = 0; d < g.order(); ++d) {
    auto acc = x.domain().zero();
    for (Id l = 0; l < g.order(); ++l) acc = acc + x.coefficient(l) * y.coefficient(g.multiply(g.inverse(l), d));
    out.set(d, acc);
  }
  return out;
}

// Basis of the center of F_q[G] as the nullspace of x -> x g - g x, g in G.
std::size_t nullspace_center_dimension(const FiniteGroupPtr& g, const FqField& f,
                                       const std::vector<FqGroupAlgebra>& check_members) {
  const auto n = g->order();
  linalg::Rows<FqField::code_type> equations;
  for (Id h = 0; h < n; ++h) {
    // (x h)_d = x_{d h^-1}; (h x)_d = x_{h^-1 d}.
    for (Id d = 0; d < n; ++d) {
      linalg::Row<FqField::code_type> row(n, 0);
      row[g->multiply(d, g->inverse(h))] = f.add(row[g->multiply(d, g->inverse(h))], 1);
      row[g->multiply(g->inverse(h), d)] = f.sub(row[g->multiply(g->inverse(h), d)], 1);
      equations.push_back(row);
    }
  }
  const linalg::FqOps ops{f};
  const auto basis = linalg::nullspace(ops, n, equations);
  auto space = linalg::row_space(ops, n, basis);
  for (const auto& m : check_members) {
    linalg::Row<FqField::code_type> row(n);
    for (Id d = 0; d < n; ++d) row[d] = m.coefficient(d).code();
    CHECK(space.contains(row));
  }
  return basis.size();
}

}  // namespace

TEST_CASE("convolution of point masses") {
  const auto s3 = groups::symmetric(3);
  const auto f5 = FqField::prime(5);
  for (Id g = 0; g < 6; ++g)
    for (Id h = 0; h < 6; ++h)
      CHECK(FqGroupAlgebra::delta(s3, f5, g) * FqGroupAlgebra::delta(s3, f5, h) ==
            FqGroupAlgebra::delta(s3, f5, s3->multiply(g, h)));
  std::mt19937_64 rng(1);
  for (int i = 0; i < 20; ++i) {
    const auto x = random_fq_element(rng, s3, f5);
    CHECK(x * FqGroupAlgebra::unit(s3, f5) == x);
    CHECK(FqGroupAlgebra::unit(s3, f5) * x == x);
  }
}

TEST_CASE("convolution matches the dense formula") {
  std::mt19937_64 rng(2);
  const auto d4 = groups::dihedral(4);
  const auto f7 = FqField::prime(7);
  for (int i = 0; i < 50; ++i) {
    const auto x = random_fq_element(rng, d4, f7);
    const auto y = random_fq_element(rng, d4, f7);
    CHECK(x * y == brute_convolve(x, y));
  }
  const PadicField q5{5, 32};
  const auto s3 = groups::symmetric(3);
  for (int i = 0; i < 50; ++i) {
    const auto x = random_padic_element(rng, s3, q5, -2);
    const auto y = random_padic_element(rng, s3, q5, -2);
    CHECK(x * y == brute_convolve(x, y));
  }
}

TEST_CASE("transposition class sum is central in F_5[S_3]") {
  const auto s3 = groups::symmetric(3);
  const auto f5 = FqField::prime(5);
  FqGroupAlgebra t(s3, f5);
  for (const char* label : {"(1 2)", "(1 3)", "(2 3)"}) t.set(s3->parse(label), f5.one());
  std::mt19937_64 rng(3);
  for (int i = 0; i < 50; ++i) {
    const auto x = random_fq_element(rng, s3, f5);
    CHECK(brute_convolve(t, x) == brute_convolve(x, t));
    CHECK(t * x == x * t);
  }
}

TEST_CASE("convolution is associative") {
  std::mt19937_64 rng(4);
  const PadicField q5{5, 32};
  for (const auto& g : {groups::symmetric(3), groups::dihedral(4), groups::cyclic(6)}) {
    const auto f7 = FqField::prime(7);
    for (int i = 0; i < 200; ++i) {
      const auto x = random_fq_element(rng, g, f7), y = random_fq_element(rng, g, f7),
                 z = random_fq_element(rng, g, f7);
      REQUIRE((x * y) * z == x * (y * z));
      const auto a = random_padic_element(rng, g, q5, -1), b = random_padic_element(rng, g, q5, -1),
                 c = random_padic_element(rng, g, q5, -1);
      REQUIRE((a * b) * c == a * (b * c));
    }
  }
}

TEST_CASE("commutativity tracks the group") {
  std::mt19937_64 rng(5);
  const auto c6 = groups::cyclic(6);
  const auto f3 = FqField::prime(3);
  for (int i = 0; i < 50; ++i) {
    const auto x = random_fq_element(rng, c6, f3), y = random_fq_element(rng, c6, f3);
    CHECK(x * y == y * x);
  }
  const auto s3 = groups::symmetric(3);
  const auto a = FqGroupAlgebra::delta(s3, f3, s3->parse("(1 2)"));
  const auto b = FqGroupAlgebra::delta(s3, f3, s3->parse("(1 3)"));
  CHECK_FALSE(a * b == b * a);
}

TEST_CASE("mismatched operands are rejected") {
  const auto s3 = groups::symmetric(3);
  const auto c6 = groups::cyclic(6);
  const auto f5 = FqField::prime(5);
  CHECK_THROWS_AS((void)(FqGroupAlgebra::unit(s3, f5) * FqGroupAlgebra::unit(c6, f5)), Error);
  CHECK_THROWS_AS((void)(FqGroupAlgebra::unit(s3, f5) + FqGroupAlgebra::unit(s3, FqField::prime(3))), Error);
  CHECK_THROWS_AS(FqGroupAlgebra::delta(s3, f5, 6), Error);
}

TEST_CASE("sup norm") {
  const auto s3 = groups::symmetric(3);
  const PadicField q5{5, 32};
  PadicGroupAlgebra x(s3, q5);
  x.set(0, q5.from_int(5));
  x.set(1, q5.one());
  CHECK(sup_norm(x) == 1);
  CHECK(sup_norm(PadicGroupAlgebra(s3, q5)) == 0);

  std::mt19937_64 rng(6);
  for (int i = 0; i < 500; ++i) {
    const auto a = random_padic_element(rng, s3, q5, -3);
    const auto b = random_padic_element(rng, s3, q5, -3);
    CHECK(sup_norm(a * b) <= sup_norm(a) * sup_norm(b));
  }
}

TEST_CASE("reduction of unit-ball elements") {
  const auto s3 = groups::symmetric(3);
  const PadicField q5{5, 32};
  const auto f5 = FqField::prime(5);
  const Id g = s3->parse("(1 2)");
  PadicGroupAlgebra x(s3, q5);
  x.set(0, q5.from_int(5));
  x.set(g, q5.from_int(3));
  CHECK(reduce(x) == FqGroupAlgebra::delta(s3, f5, g).scaled(f5.from_int(3)));

  std::mt19937_64 rng(7);
  for (int i = 0; i < 500; ++i) {
    const auto a = random_padic_element(rng, s3, q5);
    const auto b = random_padic_element(rng, s3, q5);
    CHECK(reduce(a * b) == reduce(a) * reduce(b));
    CHECK(reduce(a + b) == reduce(a) + reduce(b));
  }

  PadicGroupAlgebra big(s3, q5);
  big.set(0, q5.from_rational(Rational(1, 5)));
  try {
    (void)reduce(big);
    FAIL("expected NormExceedsOne");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NormExceedsOne);
  }

  // Kernel: norm < 1 reduces to zero.
  PadicGroupAlgebra small(s3, q5);
  small.set(2, q5.from_int(25));
  small.set(3, q5.from_int(-10));
  CHECK(reduce(small).is_zero());
}

TEST_CASE("center class sums") {
  const auto s3 = groups::symmetric(3);
  const auto f5 = FqField::prime(5);
  const auto sums = center_class_sums(s3, f5);
  CHECK(sums.size() == 3);
  for (const auto& z : sums)
    for (Id g = 0; g < 6; ++g) {
      const auto d = FqGroupAlgebra::delta(s3, f5, g);
      CHECK(brute_convolve(z, d) == brute_convolve(d, z));
    }
  CHECK(center_class_sums(groups::cyclic(4), f5).size() == 4);

  const auto f3 = FqField::prime(3);
  const auto d4 = groups::dihedral(4);
  const auto d4_sums = center_class_sums(d4, f3);
  CHECK(d4_sums.size() == 5);
  CHECK(nullspace_center_dimension(d4, f3, d4_sums) == 5);
}

TEST_CASE("class sums span the nullspace center for small groups") {
  const auto f2 = FqField::prime(2);
  const auto f7 = FqField::prime(7);
  for (const auto& g : {groups::cyclic(5), groups::symmetric(3), groups::dihedral(4), groups::quaternion(),
                        groups::dihedral(6), groups::symmetric(4)}) {
    for (const auto& f : {f2, f7}) {
      const auto sums = center_class_sums(g, f);
      CHECK(nullspace_center_dimension(g, f, sums) == sums.size());
    }
  }
}

TEST_CASE("orthonormality criterion") {
  const auto s3 = groups::symmetric(3);
  const PadicField q5{5, 32};
  std::vector<PadicGroupAlgebra> basis;
  for (Id a = 0; a < 6; ++a) basis.push_back(PadicGroupAlgebra::delta(s3, q5, a));
  const auto std_basis = orthonormality_test(basis);
  CHECK(std_basis.orthonormal);
  CHECK(std_basis.reduction_rank == 6);

  const Id g = s3->parse("(1 2 3)");
  PadicGroupAlgebra perturbed = PadicGroupAlgebra::unit(s3, q5);
  perturbed.set(g, q5.from_int(5));
  const auto dg = PadicGroupAlgebra::delta(s3, q5, g);
  const auto independent = orthonormality_test({perturbed, dg});
  CHECK(independent.orthonormal);
  CHECK(independent.reduction_rank == 2);

  const auto dependent = orthonormality_test({PadicGroupAlgebra::unit(s3, q5), perturbed});
  CHECK_FALSE(dependent.orthonormal);
  CHECK(dependent.reduction_rank == 1);

  CHECK_THROWS_AS(orthonormality_test({dg.scaled(q5.from_int(5))}), Error);
}

TEST_CASE("group algebra over an infinite family") {
  const auto f2 = std::make_shared<const GroupFamily>(GroupFamily::free(2));
  const PadicField q3{3, 16};
  using FreeAlgebra = GroupAlgebraElement<GroupFamily, PadicField>;
  const auto a = FreeAlgebra::delta(f2, q3, f2->parse("a"));
  const auto b = FreeAlgebra::delta(f2, q3, f2->parse("b"));
  const auto prod = (a + b) * (a + b);
  CHECK(prod.support_size() == 4);
  CHECK(prod.coefficient(f2->parse("ab")) == q3.one());
  CHECK(sup_norm(prod) == 1);
  const auto r = orthonormality_test(std::vector<FreeAlgebra>{a, b, a + b});
  CHECK_FALSE(r.orthonormal);
  CHECK(r.reduction_rank == 2);
}
