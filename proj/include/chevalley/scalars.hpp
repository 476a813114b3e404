#pragma once

// Exact scalar fields, their automorphisms, and the prime-support function.

#include <set>
#include <vector>

#include "chevalley/error.hpp"
#include "chevalley/field_automorphism.hpp"
#include "chevalley/fields.hpp"
#include "chevalley/polynomial.hpp"
#include "chevalley/quadratic.hpp"
#include "chevalley/rational.hpp"
#include "chevalley/rational_function.hpp"

namespace chevalley {

using PrimeSupport = std::set<Integer>;

/// Primes dividing the numerator or denominator of x.  ZeroArgument for x = 0.
PrimeSupport nu(const Rational& x);

/// True iff the prime supports of xs are pairwise disjoint.
bool nu_pairwise_disjoint(const std::vector<Rational>& xs);

}  // namespace chevalley
