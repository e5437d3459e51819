#pragma once

#include "schouten/grassmann.hpp"

#include <cstdint>

namespace schouten {

// Deterministic splitmix64 stream; identical output on every platform, which
// keeps suite reports byte-identical for a given seed.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next();
    // uniform in [0, n)
    std::uint64_t below(std::uint64_t n);
    // uniform in [lo, hi] inclusive
    int range(int lo, int hi);
    // small nonzero numerator over denominator in {1,2}
    Rational coefficient();

  private:
    std::uint64_t state_;
};

// Random polynomial with `terms` monomials of total degree <= max_degree.
Scalar random_scalar(Rng& rng, const Chart& chart, int max_degree, int terms = 2);

// Random element of fixed tensor degree with random scalar coefficients.
GrassmannElement random_element(Rng& rng, const Chart& chart, const GenList& gens,
                                int tensor_degree, int max_coeff_degree, int terms = 2);

} // namespace schouten
