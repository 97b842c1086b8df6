#include "gclm/spectral.hpp"

#include <cmath>

namespace gclm {

Field hilbert(const Field& f) {
    std::vector<cplx> h(f.coeffs());
    h[0] = cplx(0.0, 0.0);
    for (size_t k = 1; k < h.size(); ++k) h[k] *= cplx(0.0, -1.0);
    return Field(f.grid_ptr(), std::move(h));
}

std::pair<Field, Field> velocity(const Field& omega) {
    Field ux = hilbert(omega);
    std::vector<cplx> u(ux.coeffs());
    double re_sum = 0.0;
    for (size_t k = 1; k < u.size(); ++k) {
        u[k] /= cplx(0.0, (double)k);
        re_sum += u[k].real();
    }
    u[0] = cplx(-2.0 * re_sum, 0.0);  // pins u(0) = 0 exactly
    return {Field(omega.grid_ptr(), std::move(u)), std::move(ux)};
}

Field derivative(const Field& f) {
    std::vector<cplx> d(f.coeffs());
    for (size_t k = 0; k < d.size(); ++k) d[k] *= cplx(0.0, (double)k);
    return Field(f.grid_ptr(), std::move(d));
}

Field dealias(const Field& f) {
    std::vector<cplx> c(f.coeffs());
    int K = f.grid().cutoff();
    for (size_t k = K + 1; k < c.size(); ++k) c[k] = cplx(0.0, 0.0);
    return Field(f.grid_ptr(), std::move(c));
}

Field multiply(const Field& f, const Field& g) {
    const Grid& gr = f.grid();
    auto fv = f.values();
    auto gv = g.values();
    for (int j = 0; j < gr.N(); ++j) fv[j] *= gv[j];
    return dealias(Field::from_values(f.grid_ptr(), fv));
}

Field weighted_derivative(const Field& f) {
    const Grid& gr = f.grid();
    auto fx = derivative(f).values();
    for (int j = 0; j < gr.N(); ++j) fx[j] *= std::sin(gr.node(j));
    return dealias(Field::from_values(f.grid_ptr(), fx));
}

double commutator_defect(const Field& f) {
    const Grid& gr = f.grid();
    auto lhs = weighted_derivative(hilbert(f)).values();
    auto rhs = hilbert(weighted_derivative(f)).values();
    auto fv = f.values();
    double proj = 0.0;
    for (int j = 0; j < gr.N(); ++j) proj += fv[j] * std::sin(gr.node(j));
    proj *= gr.spacing() / (2.0 * Grid::pi_);
    double worst = 0.0;
    for (int j = 0; j < gr.N(); ++j) worst = std::max(worst, std::abs(lhs[j] - rhs[j] - proj));
    return worst;
}

double eval_at(const Field& f, double x) {
    const auto& c = f.coeffs();
    double acc = c[0].real();
    for (size_t k = 1; k < c.size(); ++k)
        acc += 2.0 * (c[k].real() * std::cos(k * x) - c[k].imag() * std::sin(k * x));
    return acc;
}

double at0(const Field& f) {
    const auto& c = f.coeffs();
    double acc = c[0].real();
    for (size_t k = 1; k < c.size(); ++k) acc += 2.0 * c[k].real();
    return acc;
}

double sup_norm(const Field& f) {
    double m = 0.0;
    for (double v : f.values()) m = std::max(m, std::abs(v));
    return m;
}

double tail_fraction(const Field& f) {
    const auto& c = f.coeffs();
    int K = f.grid().cutoff();
    double total = 0.0, tail = 0.0;
    for (int k = 1; k <= K; ++k) {
        double e = std::norm(c[k]);
        total += e;
        if (2 * k > K) tail += e;
    }
    return total > 0.0 ? tail / total : 0.0;
}

}  // namespace gclm
