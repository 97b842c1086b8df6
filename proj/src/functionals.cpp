#include "gclm/functionals.hpp"

#include <algorithm>
#include <cmath>

namespace gclm {

namespace {

std::vector<double> rho_staggered(const Grid& g) {
    std::vector<double> r(g.N());
    for (int j = 0; j < g.N(); ++j) {
        double s = std::sin(g.staggered_node(j) / 2);
        r[j] = 1.0 / (s * s);
    }
    return r;
}

double median(std::vector<double> w) {
    size_t m = w.size() / 2;
    std::nth_element(w.begin(), w.begin() + m, w.end());
    return w[m];
}

// The staggered nodes flanking x = 0 carry the weight pole; an exploding
// integrand there means the field is not in the weighted space.
void check_singularity(const Grid& g, const std::vector<double>& integrand) {
    int lo = g.N() / 2 - 1, hi = g.N() / 2;
    double near = std::max(std::abs(integrand[lo]), std::abs(integrand[hi]));
    std::vector<double> mags(integrand.size());
    for (size_t j = 0; j < integrand.size(); ++j) mags[j] = std::abs(integrand[j]);
    if (near > 1e6 * median(std::move(mags)))
        throw error("weight-singularity", "integrand explodes at the weight pole");
}

}  // namespace

Field e0_field(const std::shared_ptr<const Grid>& g) {
    std::vector<cplx> c(g->nmodes(), cplx(0.0, 0.0));
    c[0] = cplx(-1.0, 0.0);
    c[1] = cplx(0.5, 0.0);
    return Field(g, std::move(c));
}

double inner_H(const Field& f, const Field& g) {
    const Grid& gr = f.grid();
    auto fx = derivative(f).staggered_values();
    auto gx = derivative(g).staggered_values();
    auto rho = rho_staggered(gr);
    double acc = 0.0;
    for (int j = 0; j < gr.N(); ++j) acc += fx[j] * gx[j] * rho[j];
    return acc * gr.spacing() / (4.0 * Grid::pi_);
}

double norm_H(const Field& f) {
    const Grid& gr = f.grid();
    auto fx = derivative(f).staggered_values();
    auto rho = rho_staggered(gr);
    std::vector<double> w(gr.N());
    for (int j = 0; j < gr.N(); ++j) w[j] = fx[j] * fx[j] * rho[j];
    check_singularity(gr, w);
    double acc = 0.0;
    for (double v : w) acc += v;
    return std::sqrt(acc * gr.spacing() / (4.0 * Grid::pi_));
}

double norm_X(const Field& f) {
    const Grid& gr = f.grid();
    double h2 = norm_H(f);
    h2 *= h2;
    auto fxx = derivative(derivative(f)).staggered_values();
    double acc = 0.0;
    for (int j = 0; j < gr.N(); ++j) {
        double c = std::cos(gr.staggered_node(j) / 2);
        acc += fxx[j] * fxx[j] * c * c;
    }
    return std::sqrt(h2 + acc * gr.spacing());
}

double dx_seminorm(const Field& f) {
    const Grid& gr = f.grid();
    auto g = derivative(weighted_derivative(f)).staggered_values();
    auto rho = rho_staggered(gr);
    double acc = 0.0;
    for (int j = 0; j < gr.N(); ++j) acc += g[j] * g[j] * rho[j];
    return std::sqrt(acc * gr.spacing());
}

double e0_component(const Field& f) { return inner_H(f, e0_field(f.grid_ptr())); }

double inner_Y(const Field& f, const Field& g) {
    return inner_H(f, g) - e0_component(g) * e0_component(f);
}

double norm_Y(const Field& f) { return std::sqrt(std::max(0.0, inner_Y(f, f))); }

Field apply_L1(const Field& f) {
    const Grid& gr = f.grid();
    auto [u, ux] = velocity(f);
    auto fx = derivative(f).values();
    auto fv = f.values();
    auto uv = u.values();
    auto uxv = ux.values();
    std::vector<double> out(gr.N());
    for (int j = 0; j < gr.N(); ++j) {
        double s = std::sin(gr.node(j)), c = std::cos(gr.node(j));
        out[j] = -s * fx[j] + c * fv[j] - uxv[j] * s + uv[j] * c;
    }
    return dealias(Field::from_values(f.grid_ptr(), out));
}

Field apply_A(const Field& f) {
    const Grid& gr = f.grid();
    auto [u, ux] = velocity(f);
    double ux0 = at0(ux);
    auto fx = derivative(f).values();
    auto fv = f.values();
    auto uv = u.values();
    std::vector<double> out(gr.N());
    for (int j = 0; j < gr.N(); ++j) {
        double s = std::sin(gr.node(j)), c = std::cos(gr.node(j));
        out[j] = -s * fx[j] + fv[j] - ux0 * s + uv[j] * c;
    }
    return dealias(Field::from_values(f.grid_ptr(), out));
}

Field apply_La(const Field& f, double a) {
    if (a == 1.0) return apply_L1(f);
    return apply_L1(f) + (a - 1.0) * apply_A(f);
}

double coercivity_ratio(const Field& f) {
    double y2 = inner_Y(f, f);
    if (y2 <= 0.0) throw error("degenerate-input", "zero Y norm");
    return inner_Y(apply_L1(f), f) / y2;
}

double ibp_defect(const Field& f) {
    const Grid& gr = f.grid();
    auto fv = f.staggered_values();
    auto fx = derivative(f).staggered_values();
    auto rho = rho_staggered(gr);
    std::vector<double> w(gr.N());
    double lhs = 0.0, rhs = 0.0;
    for (int j = 0; j < gr.N(); ++j) {
        w[j] = fv[j] * fv[j] * rho[j];
        lhs += std::sin(gr.staggered_node(j)) * fx[j] * fv[j] * rho[j];
        rhs += w[j];
    }
    check_singularity(gr, w);
    return std::abs(lhs - 0.5 * rhs) * gr.spacing();
}

double tricomi_defect(const Field& f) {
    const Grid& gr = f.grid();
    Field hf = hilbert(f);
    auto fv = f.staggered_values();
    auto hv = hf.staggered_values();
    double acc = 0.0;
    for (int j = 0; j < gr.N(); ++j) {
        double xs = gr.staggered_node(j);
        acc += std::cos(xs / 2) / std::sin(xs / 2) * fv[j] * hv[j];
    }
    double h0 = at0(hf);
    return std::abs(acc * gr.spacing() + Grid::pi_ * h0 * h0);
}

double weighted_linf_ratio(const Field& f) {
    const Grid& gr = f.grid();
    auto fv = f.staggered_values();
    auto fx = derivative(f).staggered_values();
    auto rho = rho_staggered(gr);
    double num = 0.0, den = 0.0;
    for (int j = 0; j < gr.N(); ++j) {
        num = std::max(num, std::abs(fv[j]) * std::sqrt(rho[j]));
        den += fx[j] * fx[j] * rho[j];
    }
    return num / std::sqrt(den * gr.spacing());
}

double l2rho_sq(const Field& f) {
    const Grid& gr = f.grid();
    auto fv = f.staggered_values();
    auto rho = rho_staggered(gr);
    double acc = 0.0;
    for (int j = 0; j < gr.N(); ++j) acc += fv[j] * fv[j] * rho[j];
    return acc * gr.spacing();
}

}  // namespace gclm
