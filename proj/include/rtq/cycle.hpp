#pragma once

#include <vector>

#include "rtq/tree.hpp"

namespace rtq {

/// Laufer's construction of the Artin cycle: start at the all-ones divisor and
/// add the lowest-id vertex whose pairing is positive until none remains.
/// Requires a negative definite tree. When trace is non-null, the successive
/// cycles (starting with the all-ones divisor) are appended to it.
Divisor laufer_artin_cycle(const WeightedTree& t, std::vector<Divisor>* trace = nullptr);

/// Independent oracle: the componentwise-minimal positive divisor with all
/// simple pairings <= 0, located by exhaustive search over 1 <= coeffs <=
/// bound in order of increasing total sum. Throws when the box holds no such
/// divisor or when the minimal-sum solution is not unique.
Divisor minimal_cycle_bruteforce(const WeightedTree& t, int bound);

/// -(Z.Z) of a rational tree.
long long multiplicity(const WeightedTree& t);

}  // namespace rtq
