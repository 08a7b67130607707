#pragma once

#include "uga/scalars/fq.hpp"
#include "uga/scalars/padic.hpp"

namespace uga {

/// The reduction O -> F_p of a p-adic integer. `target` must be the prime
/// field F_p; raises NegativeValuation when |x| > 1.
FqElement reduce_to_residue(const PadicScalar& x, const FqField& target);

}  // namespace uga
