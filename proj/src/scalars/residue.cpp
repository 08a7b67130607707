#include "uga/scalars/residue.hpp"

#include "uga/errors.hpp"

namespace uga {

FqElement reduce_to_residue(const PadicScalar& x, const FqField& target) {
  if (target.degree() != 1)
    fail(ErrorKind::FieldMismatch, "residue field of Q_p is the prime field");
  if (target.characteristic() != x.prime())
    fail(ErrorKind::PrimeMismatch, "residue field characteristic differs from p");
  if (x.is_zero()) return target.zero();
  const auto v = *x.valuation();
  if (v < 0)
    fail(ErrorKind::NegativeValuation, "cannot reduce " + x.to_string() + ": |x| > 1");
  if (v > 0) return target.zero();
  return target.element(static_cast<FqField::code_type>(x.unit() % x.prime()));
}

}  // namespace uga
