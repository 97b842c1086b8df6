#pragma once

#include <complex>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace gclm {

using cplx = std::complex<double>;

// Error with a short machine-readable code ("weight-singularity", "diverged", ...).
struct error : std::runtime_error {
    std::string code;
    explicit error(std::string c, const std::string& what = "")
        : std::runtime_error(what.empty() ? c : c + ": " + what), code(std::move(c)) {}
};

// Uniform periodic grid on [-pi, pi) with cached FFT plans.
//
// Coefficient convention: a real field f(x) = sum_{|k|<=N/2} c_k e^{ikx} is held
// as the Hermitian half-spectrum c_0..c_{N/2}.  The alternating phase produced
// by indexing the grid from x = -pi is folded into the transforms, so c_k are
// the true Fourier coefficients and off-grid evaluation is a plain e^{ikx} sum.
class Grid {
  public:
    explicit Grid(int N);
    ~Grid();
    Grid(const Grid&) = delete;
    Grid& operator=(const Grid&) = delete;

    int N() const { return n_; }
    int cutoff() const { return n_ / 3; }           // 2/3-rule dealias limit
    double spacing() const { return h_; }
    double node(int j) const { return -pi_ + h_ * j; }
    double staggered_node(int j) const { return node(j) + h_ / 2; }

    int nmodes() const { return n_ / 2 + 1; }

    // values (N reals, nodes) <-> coefficients (N/2+1 complex)
    std::vector<cplx> to_coeffs(const std::vector<double>& values) const;
    std::vector<double> to_values(const std::vector<cplx>& coeffs) const;
    // samples on the staggered grid (half-spacing shift)
    std::vector<double> to_staggered(const std::vector<cplx>& coeffs) const;

    // shared grids keyed by N
    static std::shared_ptr<const Grid> get(int N);

    static constexpr double pi_ = 3.14159265358979323846;

  private:
    int n_;
    double h_;
    struct Plans;
    std::unique_ptr<Plans> plans_;
};

}  // namespace gclm
