#pragma once

#include <utility>
#include <vector>

#include "speh/unitary.hpp"

namespace speh {

// Highest shifted derivative of a single factor: u(delta,k) -> u(delta,k-1)
// and pi(u(delta,k),alpha) -> pi(u(delta,k-1),alpha); k = 1 yields the empty
// representation in both cases.
UnitaryRep highestShiftedDerivativeFactor(const Factor& f);

// Factor-wise over the whole multiset.
UnitaryRep highestShiftedDerivative(const UnitaryRep& r);

// [pi, hsd(pi), hsd^2(pi), ...] down to (and including) the empty rep.
// Length is 1 + max multiplier over the factors; the empty rep alone for
// factorless input.
std::vector<UnitaryRep> derivativeLadder(const UnitaryRep& r);

// (factors with k >= 2, factors with k == 1); the two multiply back to r.
std::pair<UnitaryRep, UnitaryRep> splitRigidGeneric(const UnitaryRep& r);

} // namespace speh
