#include "uga/operators/regular.hpp"

#include <algorithm>

namespace uga {

const char* to_string(Action action) { return action == Action::Right ? "right" : "left"; }

const char* to_string(Side side) { return side == Side::RightCommutant ? "right-commutant" : "left-commutant"; }

RelationsReport check_relations(const FiniteGroupPtr& group) {
  using M = OperatorMatrix<RationalField>;
  const auto n = static_cast<FiniteGroup::element_type>(group->order());
  std::vector<M> u, v;
  for (FiniteGroup::element_type g = 0; g < n; ++g) {
    u.push_back(regular_representation(group, g, Action::Right));
    v.push_back(regular_representation(group, g, Action::Left));
  }
  const M w = flip(group);
  const M id = M::identity(RationalField{}, n, group);

  RelationsReport report;
  auto check = [&](bool ok, const std::string& what) {
    ++report.identities_checked;
    if (!ok && report.holds) {
      report.holds = false;
      report.first_violation = what;
    }
  };
  auto lbl = [&](FiniteGroup::element_type g) { return group->label(g); };

  check(w * w == id, "W^2 = I");
  for (FiniteGroup::element_type g = 0; g < n; ++g) check(w * u[g] * w == v[g], "W U_" + lbl(g) + " W = V_" + lbl(g));
  for (FiniteGroup::element_type g = 0; g < n; ++g)
    for (FiniteGroup::element_type h = 0; h < n; ++h) {
      const auto gh = group->multiply(g, h);
      check(u[g] * u[h] == u[gh], "U_" + lbl(g) + " U_" + lbl(h) + " = U_" + lbl(gh));
      check(v[g] * v[h] == v[gh], "V_" + lbl(g) + " V_" + lbl(h) + " = V_" + lbl(gh));
      check(u[g] * v[h] == v[h] * u[g], "U_" + lbl(g) + " V_" + lbl(h) + " = V_" + lbl(h) + " U_" + lbl(g));
    }
  return report;
}

TranslationApproximation translation_approximation(const OperatorMatrix<PadicField>& a, const Rational& eps) {
  if (eps <= 0) fail(ErrorKind::InvalidArgument, "eps must be positive");
  auto profile = diagonal_profile(a, Side::LeftCommutant);
  if (const auto* bad = std::get_if<NotConstant>(&profile))
    fail(ErrorKind::NotDiagonalConstant, "entry (" + a.group()->label(bad->a) + ", " + a.group()->label(bad->b) +
                                             ") breaks diagonal constancy");
  const auto& zeta = std::get<DiagonalProfile<PadicField>>(profile).eta;

  PadicGroupAlgebra kept(a.group(), a.domain());
  Rational error = 0;
  for (const auto& [g, c] : zeta.coeffs()) {
    const Rational norm = c.norm();
    if (norm >= eps)
      kept.set(g, c);
    else
      error = std::max(error, norm);
  }
  auto approximation = matrix_of(kept, Side::LeftCommutant);
  return {std::move(kept), std::move(approximation), error};
}

}  // namespace uga
