#include "gclm/analysis.hpp"

#include "gclm/functionals.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>

namespace gclm {

namespace {

double lsq_slope(const std::vector<double>& x, const std::vector<double>& y) {
    double n = (double)x.size(), sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

TheoremVerdict verdict(std::string id, double measured, double target, double tol, bool pass,
                       std::string note = "") {
    return TheoremVerdict{std::move(id), measured, target, tol, pass, std::move(note)};
}

}  // namespace

double alpha_from_formula(double c, double H_at_pi, double a) {
    if (std::abs(a * H_at_pi) < 1e-6) throw error("degenerate-denominator");
    return (c + (1.0 - a) * H_at_pi) / (a * H_at_pi);
}

HolderFit holder_fit(const ProfileRecord& rec) {
    const Grid& g = rec.omega_a.grid();
    double hmin = 10.0 * g.spacing(), hmax = 0.5;
    if (hmin >= hmax / 2) throw error("window-too-small");
    const int n = 60;
    std::vector<double> lx, ly;
    for (int i = 0; i < n; ++i) {
        double d = std::exp(std::log(hmin) + (std::log(hmax) - std::log(hmin)) * i / (n - 1));
        double v = std::abs(eval_at(rec.omega_a, Grid::pi_ - d));
        if (v <= 0.0) continue;
        lx.push_back(std::log(d));
        ly.push_back(std::log(v));
    }
    if (lx.size() < 10) throw error("window-too-small");
    return {lsq_slope(lx, ly), Grid::pi_ - hmax, Grid::pi_ - hmin};
}

OdeReconstruction ode_reconstruct(const ProfileRecord& rec, double x0) {
    if (!(x0 > 0.0 && x0 < Grid::pi_)) throw error("bad-x0", "x0 must lie in (0, pi)");
    auto [u, ux] = velocity(rec.omega_a);
    double c = rec.c_omega_a, a = rec.a;
    const int n = 4000;
    double xend = Grid::pi_ - 0.1;
    OdeReconstruction out;
    std::vector<double> integrand(n);
    for (int i = 0; i < n; ++i) {
        double x = x0 + (xend - x0) * i / (n - 1);
        double uv = eval_at(u, x);
        if (std::abs(uv) < 1e-8) throw error("u-vanishes");
        out.x.push_back(x);
        integrand[i] = (c + eval_at(ux, x)) / (a * uv);
        out.actual.push_back(eval_at(rec.omega_a, x));
    }
    double w0 = out.actual[0], I = 0.0;
    out.reconstructed.push_back(w0);
    out.max_rel_mismatch = 0.0;
    for (int i = 1; i < n; ++i) {
        I += (integrand[i] + integrand[i - 1]) / 2 * (out.x[i] - out.x[i - 1]);
        double r = w0 * std::exp(I);
        out.reconstructed.push_back(r);
        out.max_rel_mismatch =
            std::max(out.max_rel_mismatch, std::abs(r - out.actual[i]) / std::abs(out.actual[i]));
    }
    return out;
}

std::vector<TheoremVerdict> blowup_report(const Trajectory& traj, const ProfileRecord& rec) {
    if (traj.a >= 1.0) throw error("not-applicable", "blowup analysis needs a < 1");
    std::vector<TheoremVerdict> out;
    auto [T, ratio] = estimate_blowup_time(traj);
    double lifespan_bound = 1.0 / (2.0 * std::abs(1.0 - traj.a));
    out.push_back(verdict("blowup-lifespan", T, lifespan_bound, 0.0, T >= lifespan_bound,
                          "T vs 1/(2|1-a|)"));
    double target = -rec.c_omega_a;
    out.push_back(verdict("blowup-lambda-ratio", ratio, target, 0.05,
                          std::abs(ratio - target) <= 0.05 * std::abs(target),
                          "final-decade mean of lambda/(T-t)"));

    // Convergence estimate in the weighted norm, checked at every sample.
    TheoremVerdict conv = verdict("blowup-convergence", 0.0, 1.0, 0.0, false,
                                  "max over samples of ||w(t)-omega_a/lam||_H / "
                                  "(lam^{1/(4|1-a|)} ||w0-omega_a||_H)");
    try {
        double p = 1.0 / (4.0 * std::abs(1.0 - traj.a));
        double dev0 = norm_H(traj.checkpoints.front() - rec.omega_a);
        double worst = 0.0;
        for (size_t i = 0; i < traj.rows.size(); ++i) {
            double lam = traj.rows[i].lambda;
            double dev = norm_H(traj.checkpoints[i] - rec.omega_a) / lam;
            double bound = std::pow(lam, p) * dev0;
            worst = std::max(worst, bound > 0.0 ? dev / bound : (dev <= 1e-14 ? 0.0 : 1e300));
        }
        conv.measured = worst;
        conv.pass = worst <= 1.0;
    } catch (const error& e) {
        conv.note += std::string("; ") + e.code;
    }
    out.push_back(conv);

    // Reconstructed sup-norm should grow like (T-t)^{-1}.
    std::vector<double> lx, ly;
    double tau_end = traj.rows.back().tau;
    for (const auto& r : traj.rows)
        if (r.tau >= 0.5 * tau_end) {
            lx.push_back(std::log(T - r.t_phys));
            ly.push_back(std::log(r.sup_norm / r.lambda));
        }
    double slope = lsq_slope(lx, ly);
    out.push_back(verdict("blowup-supnorm-slope", slope, -1.0, 0.05,
                          std::abs(slope + 1.0) <= 0.05, "log-log slope of sup|w| vs T-t"));
    return out;
}

std::vector<TheoremVerdict> decay_report(const Trajectory& traj, const ProfileRecord& rec) {
    if (traj.a <= 1.0) throw error("not-applicable", "decay analysis needs a > 1");
    std::vector<TheoremVerdict> out;
    double t_end = traj.rows.back().t_phys;
    std::vector<const DiagnosticsRow*> late;
    for (const auto& r : traj.rows)
        if (r.t_phys >= t_end / 10.0 && r.t_phys > 0.0) late.push_back(&r);

    double c = rec.c_omega_a;
    double acc = 0.0;
    for (auto* r : late) acc += r->lambda / r->t_phys;
    double ratio = acc / late.size();
    out.push_back(verdict("decay-lambda-ratio", ratio, c, 0.10,
                          std::abs(ratio - c) <= 0.10 * std::abs(c),
                          "final-decade mean of lambda/t"));

    double qmin = 1e300, qmax = 0.0, qsum = 0.0;
    for (auto* r : late) {
        double q = r->t_phys * r->sup_norm / r->lambda;
        qmin = std::min(qmin, q);
        qmax = std::max(qmax, q);
        qsum += q;
    }
    double var = (qmax - qmin) / (qsum / late.size());
    out.push_back(verdict("decay-supnorm-plateau", var, 0.0, 0.05, var <= 0.05,
                          "relative variation of t * sup|w_phys| over the final decade"));

    double gamma = (1.0 - traj.a) * rec.H_omega_at_pi / c;
    double gamma_abs = std::abs(1.0 - traj.a) * std::abs(rec.H_omega_at_pi) / c;
    std::vector<double> lx, ly;
    for (auto* r : late) {
        double gp = std::abs(r->omega_x_at_pi) / r->lambda;
        if (gp > 0.0) {
            lx.push_back(std::log(r->t_phys));
            ly.push_back(std::log(gp));
        }
    }
    double slope = lsq_slope(lx, ly);
    std::string note = "final-decade log-log slope of |w_x(pi,t)| vs t; signed gamma=" +
                       std::to_string(gamma) + ", |.|-form gamma=" + std::to_string(gamma_abs) +
                       (gamma * gamma_abs < 0.0 ? " (SIGN DISCREPANCY)" : "");
    out.push_back(
        verdict("decay-gradient-growth", slope, gamma, 0.10, slope >= gamma - 0.10 * gamma, note));
    return out;
}

std::vector<TheoremVerdict> nonodd_report(const Trajectory& traj) {
    if (traj.rows.empty()) throw error("not-applicable", "empty trajectory");
    double mean0 = std::abs(traj.checkpoints.front().coeffs()[0].real()) * 2.0 * Grid::pi_;
    if (mean0 > 1e-10) throw error("not-applicable", "initial data must have zero mean");
    if (traj.a == 1.0) throw error("not-applicable", "needs a != 1");

    std::vector<TheoremVerdict> out;
    Field sine = -1.0 * equilibrium_field(traj.checkpoints.front().grid_ptr());  // sin x
    double p0 = norm_H(traj.checkpoints.front() + sine);
    double worst = p0;
    for (const auto& ck : traj.checkpoints) worst = std::max(worst, norm_H(ck + sine));
    out.push_back(verdict("nonodd-perturbation-bound", worst, 2.0 * p0, 0.0, worst < 2.0 * p0,
                          "max ||w + sin x||_H vs 2x initial"));

    double ratio;
    if (traj.a < 1.0) {
        auto [T, r] = estimate_blowup_time(traj);
        (void)T;
        ratio = r;
    } else {
        const auto& last = traj.rows.back();
        ratio = last.lambda / last.t_phys;
    }
    double d = std::abs(1.0 - traj.a);
    out.push_back(verdict("nonodd-lambda-ratio", ratio, d, 0.5,
                          ratio >= 0.5 * d && ratio <= 1.5 * d,
                          "lambda ratio vs [0.5, 1.5]|1-a|"));
    return out;
}

bool all_pass(const std::vector<TheoremVerdict>& v) {
    for (const auto& x : v)
        if (!x.pass) return false;
    return true;
}

std::string verdicts_to_json(const std::vector<TheoremVerdict>& v,
                             const std::string& config_echo) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& x : v)
        arr.push_back({{"claim_id", x.claim_id},
                       {"measured", x.measured},
                       {"bound_or_target", x.bound_or_target},
                       {"tolerance", x.tolerance},
                       {"pass", x.pass},
                       {"note", x.note}});
    nlohmann::json j = {{"verdicts", arr}, {"all_pass", all_pass(v)}};
    if (!config_echo.empty()) j["config"] = config_echo;
    return j.dump(2);
}

}  // namespace gclm
