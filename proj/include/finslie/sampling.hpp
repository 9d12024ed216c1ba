#pragma once

#include <cstdint>
#include <random>

#include "finslie/algebra.hpp"
#include "finslie/riemann.hpp"

namespace finslie {

/// Engine for the index-th sample of a seeded stream. Each sample owns its
/// engine, so results do not depend on evaluation order.
std::mt19937_64 sample_engine(std::uint64_t seed, std::uint64_t index);

/// Uniform n/d with |n| <= max_numerator and 1 <= d <= max_denominator.
Rational random_rational(std::mt19937_64& rng, int max_numerator = 12, int max_denominator = 8);

/// Nonzero random rational.
Rational random_nonzero_rational(std::mt19937_64& rng, int max_numerator = 12, int max_denominator = 8);

ExactVector random_vector(std::mt19937_64& rng, std::size_t dim);

/// Nonzero random combination of the subspace basis; the subspace must be nonzero.
ExactVector random_vector_in(std::mt19937_64& rng, const Subspace& s);

/// Random vector from `directions` rescaled by a rational so that g(q, q) < 1.
ExactVector random_valid_q(std::mt19937_64& rng, const Subspace& directions, const MetricTensor& metric);

}  // namespace finslie
