#include "gclm/grid.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <mutex>

namespace gclm {

namespace {
std::mutex plan_mutex;  // FFTW planning is not thread-safe; execution is
}

struct Grid::Plans {
    fftw_plan fwd = nullptr;
    fftw_plan bwd = nullptr;
    ~Plans() {
        std::lock_guard<std::mutex> lk(plan_mutex);
        if (fwd) fftw_destroy_plan(fwd);
        if (bwd) fftw_destroy_plan(bwd);
    }
};

Grid::Grid(int N) : n_(N), h_(2 * pi_ / N), plans_(std::make_unique<Plans>()) {
    if (N < 16 || N % 2 != 0) throw error("bad-grid", "N must be even and >= 16");
    std::vector<double> r(N);
    std::vector<cplx> c(N / 2 + 1);
    std::lock_guard<std::mutex> lk(plan_mutex);
    plans_->fwd = fftw_plan_dft_r2c_1d(N, r.data(), reinterpret_cast<fftw_complex*>(c.data()),
                                       FFTW_ESTIMATE | FFTW_UNALIGNED);
    plans_->bwd = fftw_plan_dft_c2r_1d(N, reinterpret_cast<fftw_complex*>(c.data()), r.data(),
                                       FFTW_ESTIMATE | FFTW_UNALIGNED);
}

Grid::~Grid() = default;

std::vector<cplx> Grid::to_coeffs(const std::vector<double>& values) const {
    if ((int)values.size() != n_) throw error("bad-field", "value count mismatch");
    std::vector<double> in(values);
    std::vector<cplx> out(nmodes());
    fftw_execute_dft_r2c(plans_->fwd, in.data(), reinterpret_cast<fftw_complex*>(out.data()));
    double sign = 1.0;
    for (int k = 0; k < nmodes(); ++k, sign = -sign) out[k] *= sign / n_;
    return out;
}

std::vector<double> Grid::to_values(const std::vector<cplx>& coeffs) const {
    if ((int)coeffs.size() != nmodes()) throw error("bad-field", "coeff count mismatch");
    std::vector<cplx> in(coeffs);
    double sign = 1.0;
    for (int k = 0; k < nmodes(); ++k, sign = -sign) in[k] *= sign;
    in[0] = cplx(in[0].real(), 0.0);
    in[nmodes() - 1] = cplx(in[nmodes() - 1].real(), 0.0);
    std::vector<double> out(n_);
    fftw_execute_dft_c2r(plans_->bwd, reinterpret_cast<fftw_complex*>(in.data()), out.data());
    return out;
}

std::vector<double> Grid::to_staggered(const std::vector<cplx>& coeffs) const {
    std::vector<cplx> shifted(coeffs);
    for (int k = 0; k < nmodes(); ++k) {
        double ph = k * h_ / 2;
        shifted[k] *= cplx(std::cos(ph), std::sin(ph));
    }
    shifted[nmodes() - 1] = cplx(0.0, 0.0);  // Nyquist mode has no clean half-shift
    return to_values(shifted);
}

std::shared_ptr<const Grid> Grid::get(int N) {
    static std::mutex m;
    static std::map<int, std::shared_ptr<const Grid>> cache;
    std::lock_guard<std::mutex> lk(m);
    auto& g = cache[N];
    if (!g) g = std::make_shared<Grid>(N);
    return g;
}

}  // namespace gclm
