#pragma once

#include "gclm/grid.hpp"

namespace gclm {

// Real periodic field held as Fourier coefficients on a shared Grid.
// Values are materialized on demand; the coefficient array is canonical.
class Field {
  public:
    Field() = default;
    Field(std::shared_ptr<const Grid> g, std::vector<cplx> coeffs)
        : grid_(std::move(g)), c_(std::move(coeffs)) {
        if ((int)c_.size() != grid_->nmodes()) throw error("bad-field", "coeff count mismatch");
    }

    static Field from_values(std::shared_ptr<const Grid> g, const std::vector<double>& v) {
        auto c = g->to_coeffs(v);
        return Field(std::move(g), std::move(c));
    }
    static Field zero(std::shared_ptr<const Grid> g) {
        std::vector<cplx> c(g->nmodes(), cplx(0.0, 0.0));
        return Field(std::move(g), std::move(c));
    }

    const Grid& grid() const { return *grid_; }
    std::shared_ptr<const Grid> grid_ptr() const { return grid_; }
    int N() const { return grid_->N(); }

    const std::vector<cplx>& coeffs() const { return c_; }
    std::vector<cplx>& coeffs() { return c_; }
    std::vector<double> values() const { return grid_->to_values(c_); }
    std::vector<double> staggered_values() const { return grid_->to_staggered(c_); }

    Field& operator+=(const Field& o) {
        for (size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
        return *this;
    }
    Field& operator-=(const Field& o) {
        for (size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
        return *this;
    }
    Field& operator*=(double s) {
        for (auto& z : c_) z *= s;
        return *this;
    }
    friend Field operator+(Field a, const Field& b) { return a += b; }
    friend Field operator-(Field a, const Field& b) { return a -= b; }
    friend Field operator*(double s, Field f) { return f *= s; }

  private:
    std::shared_ptr<const Grid> grid_;
    std::vector<cplx> c_;
};

}  // namespace gclm
