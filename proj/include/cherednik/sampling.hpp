/// @file sampling.hpp
/// @brief Seeded random scalars and parameter vectors for verification sweeps.
///
/// All draws go through std::mt19937_64 so sweeps are reproducible from a
/// single seed.  Rational heights (max of |numerator| and denominator) stay
/// small so exact arithmetic in long sweeps remains fast.

#pragma once

#include <random>

#include "cherednik/params.hpp"
#include "cherednik/rational.hpp"
#include "cherednik/scalars.hpp"

namespace cherednik {

/// Uniform rational with numerator in [-max_height, max_height] and
/// denominator in [1, max_height].
Rational random_rational(std::mt19937_64& rng, long max_height);

/// Uniform integer-valued rational in [-max_height, max_height].
Rational random_integer_rational(std::mt19937_64& rng, long max_height);

/// Random parameter vector (c_n = 0) with rational entries.
RatParams random_rat_params(std::mt19937_64& rng, int n, long max_height);

/// Random parameter vector with integer entries.
RatParams random_integer_params(std::mt19937_64& rng, int n, long max_height);

/// Random parameter vector with complex entries in the square [-r, r]^2.
CxParams random_cx_params(std::mt19937_64& rng, int n, double radius);

/// Random rational parameters that are semisimple: entries are offset by
/// 1/p for a prime p > n so no congruence mod n can hold between distinct
/// slots.
RatParams random_semisimple_params(std::mt19937_64& rng, int n, long max_height);

}  // namespace cherednik
