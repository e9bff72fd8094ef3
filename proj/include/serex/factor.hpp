#pragma once

// Integer factorization support for radical canonicalization.

#include <map>

#include "serex/rational.hpp"

namespace serex {

// Deterministic Miller-Rabin, exact for all inputs reachable here.
bool is_probable_prime(const Int& n);

// Prime -> multiplicity map of value; requires value >= 1.  factorize(1) is empty.
// Deterministic across runs (fixed-seed Pollard rho for large cofactors).
std::map<Int, int> factorize(const Int& value);

}  // namespace serex
