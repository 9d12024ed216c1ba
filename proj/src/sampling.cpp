#include "finslie/sampling.hpp"

#include <stdexcept>

namespace finslie {

std::mt19937_64 sample_engine(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

Rational random_rational(std::mt19937_64& rng, int max_numerator, int max_denominator) {
  std::uniform_int_distribution<long> num(-max_numerator, max_numerator);
  std::uniform_int_distribution<long> den(1, max_denominator);
  const long n = num(rng);
  return Rational(n, den(rng));
}

Rational random_nonzero_rational(std::mt19937_64& rng, int max_numerator, int max_denominator) {
  for (;;) {
    Rational r = random_rational(rng, max_numerator, max_denominator);
    if (!r.is_zero()) return r;
  }
}

ExactVector random_vector(std::mt19937_64& rng, std::size_t dim) {
  ExactVector v(dim);
  for (std::size_t i = 0; i < dim; ++i) v[i] = random_rational(rng);
  return v;
}

ExactVector random_vector_in(std::mt19937_64& rng, const Subspace& s) {
  if (s.is_zero()) throw std::invalid_argument("cannot sample from the zero subspace");
  for (;;) {
    ExactVector v(s.ambient_dim());
    for (const auto& b : s.basis()) v += random_rational(rng) * b;
    if (!v.is_zero()) return v;
  }
}

ExactVector random_valid_q(std::mt19937_64& rng, const Subspace& directions, const MetricTensor& metric) {
  const ExactVector v = random_vector_in(rng, directions);
  const Rational norm = inner(metric, v, v);
  // m^2 > g(v,v), so g(v/m, v/m) < 1; then shrink by k/10 with k in 1..9
  long m = static_cast<long>(norm.to_double()) + 1;
  while (Rational(m * m) <= norm) ++m;
  std::uniform_int_distribution<long> k(1, 9);
  return Rational(k(rng), 10 * m) * v;
}

}  // namespace finslie
