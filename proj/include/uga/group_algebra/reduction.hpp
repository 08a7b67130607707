#pragma once

#include <vector>

#include "uga/group_algebra/element.hpp"
#include "uga/scalars/residue.hpp"

namespace uga {

/// max_g |x_g|, exactly.
template <class Group>
Rational sup_norm(const GroupAlgebraElement<Group, PadicField>& x) {
  Rational best = 0;
  for (const auto& [g, c] : x.coeffs()) best = std::max(best, c.norm());
  return best;
}

/// Coefficient-wise reduction of a unit-ball element to F_p[G].
/// Raises NormExceedsOne outside the unit ball.
template <class Group>
GroupAlgebraElement<Group, FqField> reduce(const GroupAlgebraElement<Group, PadicField>& x) {
  const auto residue = FqField::prime(x.domain().p);
  if (sup_norm(x) > 1)
    fail(ErrorKind::NormExceedsOne, "sup-norm " + to_string(sup_norm(x)) + " exceeds one");
  GroupAlgebraElement<Group, FqField> out(x.group_ptr(), residue);
  for (const auto& [g, c] : x.coeffs()) out.set(g, reduce_to_residue(c, residue));
  return out;
}

/// Indicator of each conjugacy class, in the order of
/// groups::conjugacy_classes; a basis of the center of F_q[G].
std::vector<FqGroupAlgebra> center_class_sums(const FiniteGroupPtr& group, const FqField& field);

struct OrthonormalityResult {
  bool orthonormal = false;
  /// Rank over the residue field of the reduced coefficient matrix.
  std::size_t reduction_rank = 0;
};

/// A finite family of norm-one vectors is orthonormal exactly when its
/// reductions are linearly independent over the residue field.
/// Raises InvalidArgument for a vector whose norm is not 1.
OrthonormalityResult orthonormality_test(const std::vector<PadicGroupAlgebra>& vectors);
OrthonormalityResult orthonormality_test(const std::vector<GroupAlgebraElement<GroupFamily, PadicField>>& vectors);

}  // namespace uga
