#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "uga/errors.hpp"
#include "uga/group_algebra/element.hpp"
#include "uga/groups/finite_group.hpp"
#include "uga/operators/matrix.hpp"
#include "uga/scalars/numeric.hpp"

namespace uga {

/// Which regular action: Right is U_g x = [x_{ag}], Left is V_g x = [x_{g^-1 a}].
enum class Action { Right, Left };

/// Diagonal shape of a matrix. RightCommutant: alpha_{a,b} = eta_{a b^-1};
/// LeftCommutant: alpha_{a,b} = zeta_{a^-1 b}.
enum class Side { RightCommutant, LeftCommutant };

const char* to_string(Action action);
const char* to_string(Side side);

template <class Domain = RationalField>
OperatorMatrix<Domain> regular_representation(const FiniteGroupPtr& group, FiniteGroup::element_type g, Action action,
                                              Domain domain = Domain{}) {
  if (!group->contains(g)) fail(ErrorKind::InvalidArgument, "element outside " + group->name());
  const auto n = group->order();
  OperatorMatrix<Domain> m(domain, n, group);
  const auto g_inv = group->inverse(g);
  for (FiniteGroup::element_type a = 0; a < n; ++a) {
    const auto b = action == Action::Right ? group->multiply(a, g) : group->multiply(g_inv, a);
    m.set(a, b, domain.one());
  }
  return m;
}

/// The flip W x = [x_{a^-1}].
template <class Domain = RationalField>
OperatorMatrix<Domain> flip(const FiniteGroupPtr& group, Domain domain = Domain{}) {
  const auto n = group->order();
  OperatorMatrix<Domain> m(domain, n, group);
  for (FiniteGroup::element_type a = 0; a < n; ++a) m.set(a, group->inverse(a), domain.one());
  return m;
}

struct RelationsReport {
  bool holds = true;
  std::size_t identities_checked = 0;
  std::optional<std::string> first_violation;
};

/// W^2 = I, W U_g W = V_g, U_g U_h = U_gh, V_g V_h = V_gh and U_g V_h = V_h U_g,
/// all by exact matrix products.
RelationsReport check_relations(const FiniteGroupPtr& group);

template <class Domain>
OperatorMatrix<Domain> matrix_of(const GroupAlgebraElement<FiniteGroup, Domain>& x, Side side) {
  const auto& group = x.group_ptr();
  const auto n = group->order();
  OperatorMatrix<Domain> m(x.domain(), n, group);
  for (FiniteGroup::element_type a = 0; a < n; ++a)
    for (FiniteGroup::element_type b = 0; b < n; ++b) {
      const auto c = side == Side::LeftCommutant ? group->multiply(group->inverse(a), b)
                                                 : group->multiply(a, group->inverse(b));
      m.set(a, b, x.coefficient(c));
    }
  return m;
}

template <class Domain>
struct DiagonalProfile {
  Side side;
  GroupAlgebraElement<FiniteGroup, Domain> eta;
};

/// First entry (row-major) that breaks constancy along its diagonal.
struct NotConstant {
  FiniteGroup::element_type a;
  FiniteGroup::element_type b;
};

template <class Domain>
using ProfileResult = std::variant<DiagonalProfile<Domain>, NotConstant>;

/// Reads eta_c = alpha_{c,1} (RightCommutant) or zeta_c = alpha_{1,c}
/// (LeftCommutant) and checks every other entry against it.
template <class Domain>
ProfileResult<Domain> diagonal_profile(const OperatorMatrix<Domain>& m, Side side) {
  const auto& group = m.group();
  if (!group) fail(ErrorKind::InvalidArgument, "diagonal profile needs a group-indexed matrix");
  const auto n = group->order();
  GroupAlgebraElement<FiniteGroup, Domain> eta(group, m.domain());
  for (FiniteGroup::element_type c = 0; c < n; ++c)
    eta.set(c, side == Side::RightCommutant ? m.at(c, 0) : m.at(0, c));
  for (FiniteGroup::element_type a = 0; a < n; ++a)
    for (FiniteGroup::element_type b = 0; b < n; ++b) {
      const auto c = side == Side::LeftCommutant ? group->multiply(group->inverse(a), b)
                                                 : group->multiply(a, group->inverse(b));
      if (!(m.at(a, b) == eta.coefficient(c))) return NotConstant{a, b};
    }
  return DiagonalProfile<Domain>{side, std::move(eta)};
}

struct TranslationApproximation {
  /// A_eps = sum over kept g of c_g U_g.
  PadicGroupAlgebra coefficients;
  OperatorMatrix<PadicField> approximation;
  /// ||A - A_eps||: the largest norm among the dropped diagonals.
  Rational error;
};

/// Keeps the diagonals of A whose value has norm >= eps. A must be constant
/// along the LeftCommutant diagonals, where A = sum_g zeta_g U_g.
TranslationApproximation translation_approximation(const OperatorMatrix<PadicField>& a, const Rational& eps);

}  // namespace uga
