#pragma once

#include "gclm/field.hpp"

#include <cstdint>
#include <random>

namespace gclm {

// Deterministic random band-limited fields for identity and coercivity checks.
class FieldSampler {
  public:
    explicit FieldSampler(uint64_t seed) : rng_(seed) {}

    // Zero-mean field with modes 1..kmax, coefficients ~ N(0,1)/k^{3/2}.
    Field zero_mean(const std::shared_ptr<const Grid>& g, int kmax = 40);

    // Zero-mean field with f(0) = 0.
    Field vanishing_at_zero(const std::shared_ptr<const Grid>& g, int kmax = 40);

    // Zero-mean field with f(0) = 0 and f_x(0) = 0 (in the weighted space).
    Field admissible(const std::shared_ptr<const Grid>& g, int kmax = 40);

  private:
    Field build(const std::shared_ptr<const Grid>& g, int kmax, bool zero_at_zero,
                bool zero_slope);
    std::mt19937_64 rng_;
};

}  // namespace gclm
