#include "gclm/dynamics.hpp"

#include "gclm/functionals.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

namespace gclm {

namespace {

constexpr double kCflSafety = 0.4;
constexpr double kDivergeNorm = 1e6;
constexpr double kTailLimit = 1e-8;

double max_abs(const std::vector<double>& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

// Smooth spectral cutoff exp(-36 (k/K)^36): identity to machine precision on
// the lower 30% of the retained band, zero beyond the dealias cutoff.
void filter_state(std::vector<cplx>& c, int K) {
    for (size_t k = 0; k < c.size(); ++k) {
        if ((int)k > K) {
            c[k] = cplx(0.0, 0.0);
            continue;
        }
        double r = (double)k / K;
        double r2 = r * r, r4 = r2 * r2, r8 = r4 * r4, r16 = r8 * r8, r32 = r16 * r16;
        c[k] *= std::exp(-36.0 * r32 * r4);
    }
}

// Restore omega(0) = 0 by shifting the k = 1 cosine amplitude; this removes
// the one neutral-to-growing even direction (cos x) the filter cannot touch.
void restore_zero_at_origin(std::vector<cplx>& c) {
    double v = c[0].real();
    for (size_t k = 1; k < c.size(); ++k) v += 2.0 * c[k].real();
    c[1] -= cplx(v / 2, 0.0);
}

void project_odd(std::vector<cplx>& c) {
    for (auto& z : c) z = cplx(0.0, z.imag());
}

bool is_odd(const Field& f) {
    double m = 0.0;
    for (const auto& z : f.coeffs()) m = std::max(m, std::abs(z.real()));
    return m <= 1e-12;
}

}  // namespace

RescaledState RescaledState::start(Field omega0, double a) {
    RescaledState s;
    s.odd = is_odd(omega0);
    s.omega = std::move(omega0);
    s.a = a;
    s.c_omega = (a - 1.0) * at0(hilbert(s.omega));
    return s;
}

Field rhs_physical(const Field& omega, double a) {
    const Grid& gr = omega.grid();
    auto [u, ux] = velocity(omega);
    auto uv = u.values();
    auto uxv = ux.values();
    auto wx = derivative(omega).values();
    auto wv = omega.values();
    std::vector<double> out(gr.N());
    for (int j = 0; j < gr.N(); ++j) out[j] = -a * uv[j] * wx[j] + uxv[j] * wv[j];
    return dealias(Field::from_values(omega.grid_ptr(), out));
}

std::pair<Field, double> rhs_rescaled(const Field& omega, double a) {
    const Grid& gr = omega.grid();
    auto [u, ux] = velocity(omega);
    double c = (a - 1.0) * at0(ux);
    auto uv = u.values();
    auto uxv = ux.values();
    auto wx = derivative(omega).values();
    auto wv = omega.values();
    std::vector<double> out(gr.N());
    for (int j = 0; j < gr.N(); ++j) out[j] = -a * uv[j] * wx[j] + (c + uxv[j]) * wv[j];
    return {dealias(Field::from_values(omega.grid_ptr(), out)), c};
}

double cfl_dt(const RescaledState& s) {
    auto [u, ux] = velocity(s.omega);
    double speed = std::abs(s.a) * max_abs(u.values());
    double h = s.omega.grid().spacing();
    return speed > 0.0 ? kCflSafety * h / speed : 1e3 * h;
}

RescaledState step(const RescaledState& s, double dt) {
    if (dt <= 0.0) throw error("bad-step", "dt must be positive");
    if (dt > cfl_dt(s) * (1.0 + 1e-9)) throw error("cfl-violation");

    auto axpy = [](const Field& f, double w, const Field& k) {
        Field r = f;
        const auto& kc = k.coeffs();
        auto& rc = r.coeffs();
        for (size_t i = 0; i < rc.size(); ++i) rc[i] += w * kc[i];
        return r;
    };

    auto [k1, c1] = rhs_rescaled(s.omega, s.a);
    double e1 = std::exp(s.log_C);
    auto [k2, c2] = rhs_rescaled(axpy(s.omega, dt / 2, k1), s.a);
    double e2 = std::exp(s.log_C + dt / 2 * c1);
    auto [k3, c3] = rhs_rescaled(axpy(s.omega, dt / 2, k2), s.a);
    double e3 = std::exp(s.log_C + dt / 2 * c2);
    auto [k4, c4] = rhs_rescaled(axpy(s.omega, dt, k3), s.a);
    double e4 = std::exp(s.log_C + dt * c3);

    RescaledState n = s;
    auto& c = n.omega.coeffs();
    const auto &a1 = k1.coeffs(), &a2 = k2.coeffs(), &a3 = k3.coeffs(), &a4 = k4.coeffs();
    for (size_t i = 0; i < c.size(); ++i)
        c[i] += dt / 6 * (a1[i] + 2.0 * a2[i] + 2.0 * a3[i] + a4[i]);

    if (s.odd)
        project_odd(c);
    else
        restore_zero_at_origin(c);
    filter_state(c, n.omega.grid().cutoff());
    if (tail_fraction(n.omega) > kTailLimit) throw error("resolution-loss");

    n.tau = s.tau + dt;
    n.log_C = s.log_C + dt / 6 * (c1 + 2 * c2 + 2 * c3 + c4);
    n.t_phys = s.t_phys + dt / 6 * (e1 + 2 * e2 + 2 * e3 + e4);
    n.c_omega = (n.a - 1.0) * at0(hilbert(n.omega));
    return n;
}

Field step_physical(const Field& omega, double a, double dt) {
    auto axpy = [](const Field& f, double w, const Field& k) {
        Field r = f;
        const auto& kc = k.coeffs();
        auto& rc = r.coeffs();
        for (size_t i = 0; i < rc.size(); ++i) rc[i] += w * kc[i];
        return r;
    };
    Field k1 = rhs_physical(omega, a);
    Field k2 = rhs_physical(axpy(omega, dt / 2, k1), a);
    Field k3 = rhs_physical(axpy(omega, dt / 2, k2), a);
    Field k4 = rhs_physical(axpy(omega, dt, k3), a);
    Field r = omega;
    auto& c = r.coeffs();
    const auto &a1 = k1.coeffs(), &a2 = k2.coeffs(), &a3 = k3.coeffs(), &a4 = k4.coeffs();
    for (size_t i = 0; i < c.size(); ++i)
        c[i] += dt / 6 * (a1[i] + 2.0 * a2[i] + 2.0 * a3[i] + a4[i]);
    return r;
}

DiagnosticsRow diagnostics(const RescaledState& s) {
    DiagnosticsRow r;
    r.tau = s.tau;
    r.t_phys = s.t_phys;
    r.lambda = std::exp(s.log_C);
    auto [F, c] = rhs_rescaled(s.omega, s.a);
    r.c_omega = c;
    r.h_norm = norm_H(s.omega);
    r.x_norm = norm_X(s.omega);
    r.sup_norm = sup_norm(s.omega);
    r.omega_x_at_pi = eval_at(derivative(s.omega), Grid::pi_);
    r.u_x_at_0 = at0(hilbert(s.omega));
    r.residual_h = norm_H(F);
    return r;
}

Trajectory evolve(const Field& omega0, double a, double horizon, double sample_stride) {
    if (horizon <= 0.0) throw error("bad-horizon", "horizon must be positive");
    if (sample_stride <= 0.0) sample_stride = horizon / 100.0;

    Trajectory traj;
    traj.a = a;
    traj.grid_N = omega0.N();
    RescaledState s = RescaledState::start(dealias(omega0), a);

    auto record = [&](const RescaledState& st) {
        traj.rows.push_back(diagnostics(st));
        traj.checkpoints.push_back(st.omega);
        if (traj.rows.back().h_norm > kDivergeNorm) throw error("diverged");
    };
    record(s);

    double next_sample = sample_stride;
    while (s.tau < horizon - 1e-12) {
        double dt = std::min(cfl_dt(s), std::min(next_sample - s.tau, horizon - s.tau));
        s = step(s, dt);
        if (s.tau >= next_sample - 1e-12) {
            record(s);
            next_sample += sample_stride;
        }
    }
    return traj;
}

std::pair<Field, double> reconstruct_physical(const Trajectory& traj, size_t i) {
    if (i >= traj.rows.size()) throw error("bad-index", "no such sampled row");
    Field f = traj.checkpoints[i];
    f *= 1.0 / traj.rows[i].lambda;
    return {std::move(f), traj.rows[i].t_phys};
}

std::pair<double, double> estimate_blowup_time(const Trajectory& traj) {
    if (traj.rows.size() < 4) throw error("not-collapsing", "too few samples");
    const auto& last = traj.rows.back();
    double tau_end = last.tau;
    size_t i0 = traj.rows.size();
    for (size_t i = 0; i < traj.rows.size(); ++i)
        if (traj.rows[i].tau >= 0.9 * tau_end) {
            i0 = i;
            break;
        }
    double cref = traj.rows[i0].c_omega;
    if (!(last.c_omega < 0.0) || std::abs(last.c_omega - cref) > 0.05 * std::abs(last.c_omega))
        throw error("not-collapsing", "scaling factor has not stabilized negative");

    double T = last.t_phys + last.lambda / std::abs(last.c_omega);
    double acc = 0.0;
    size_t n = 0;
    for (size_t i = i0; i < traj.rows.size(); ++i) {
        acc += traj.rows[i].lambda / (T - traj.rows[i].t_phys);
        ++n;
    }
    return {T, acc / n};
}

void write_csv(const Trajectory& traj, std::ostream& os, const std::string& header_comment) {
    if (!header_comment.empty()) os << "# " << header_comment << "\n";
    os << "tau,t_phys,lambda,c_omega,h_norm,x_norm,sup_norm,omega_x_at_pi,u_x_at_0,residual_h\n";
    char buf[360];
    for (const auto& r : traj.rows) {
        std::snprintf(buf, sizeof buf,
                      "%.12g,%.12g,%.12g,%.12g,%.12g,%.12g,%.12g,%.12g,%.12g,%.12g\n", r.tau,
                      r.t_phys, r.lambda, r.c_omega, r.h_norm, r.x_norm, r.sup_norm,
                      r.omega_x_at_pi, r.u_x_at_0, r.residual_h);
        os << buf;
    }
}

}  // namespace gclm
