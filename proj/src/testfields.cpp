#include "gclm/testfields.hpp"

#include <cmath>

namespace gclm {

Field FieldSampler::build(const std::shared_ptr<const Grid>& g, int kmax, bool zero_at_zero,
                          bool zero_slope) {
    if (kmax >= g->cutoff()) throw error("bad-sample", "kmax must sit below the dealias cutoff");
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<double> a(kmax + 1, 0.0), b(kmax + 1, 0.0);
    for (int k = 1; k <= kmax; ++k) {
        double w = 1.0 / std::pow((double)k, 1.5);
        a[k] = gauss(rng_) * w;
        b[k] = gauss(rng_) * w;
    }
    if (zero_at_zero) {
        double s = 0.0;
        for (int k = 2; k <= kmax; ++k) s += a[k];
        a[1] = -s;  // sum of cosine amplitudes vanishes -> f(0) = 0
    }
    if (zero_slope) {
        double s = 0.0;
        for (int k = 2; k <= kmax; ++k) s += k * b[k];
        b[1] = -s;  // sum k b_k vanishes -> f_x(0) = 0
    }
    std::vector<cplx> c(g->nmodes(), cplx(0.0, 0.0));
    for (int k = 1; k <= kmax; ++k) c[k] = cplx(a[k] / 2, -b[k] / 2);
    return Field(g, std::move(c));
}

Field FieldSampler::zero_mean(const std::shared_ptr<const Grid>& g, int kmax) {
    return build(g, kmax, false, false);
}

Field FieldSampler::vanishing_at_zero(const std::shared_ptr<const Grid>& g, int kmax) {
    return build(g, kmax, true, false);
}

Field FieldSampler::admissible(const std::shared_ptr<const Grid>& g, int kmax) {
    return build(g, kmax, true, true);
}

}  // namespace gclm
