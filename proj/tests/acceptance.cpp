// Acceptance suite: one criterion per invocation, one PASS/FAIL line each.

#include "gclm/analysis.hpp"
#include "gclm/dynamics.hpp"
#include "gclm/functionals.hpp"
#include "gclm/profile.hpp"
#include "gclm/testfields.hpp"

#include <cmath>
#include <cstdio>
#include <cstring>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace gclm;

namespace {

constexpr int kN = 1024;

Field make(const std::shared_ptr<const Grid>& g, double s1, double s2, double cpair) {
    std::vector<double> v(g->N());
    for (int j = 0; j < g->N(); ++j) {
        double x = g->node(j);
        v[j] = -s1 * std::sin(x) + s2 * std::sin(2 * x) + cpair * (std::cos(2 * x) - std::cos(x));
    }
    return Field::from_values(g, v);
}

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

struct Outcome {
    bool pass = true;
    std::string detail;
    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            if (!detail.empty()) detail += "; ";
            detail += what;
        }
    }
};

// 1. exact operator identities
Outcome criterion1() {
    Outcome o;
    auto g = Grid::get(kN);
    double worst = 0.0;
    for (int k = 1; k <= g->cutoff(); ++k) {
        std::vector<cplx> c(g->nmodes(), cplx(0.0, 0.0));
        c[k] = cplx(0.4, 0.3);
        Field h = hilbert(Field(g, c));
        worst = std::max(worst, std::abs(h.coeffs()[k] - cplx(0.4, 0.3) * cplx(0.0, -1.0)) / 0.5);
    }
    o.require(worst <= 1e-12, "hilbert multiplier defect " + std::to_string(worst));

    FieldSampler smp(7);
    double comm = 0.0, ibp = 0.0, tri = 0.0;
    for (int t = 0; t < 100; ++t) {
        comm = std::max(comm, commutator_defect(smp.zero_mean(g)));
        Field fa = smp.admissible(g);
        ibp = std::max(ibp, ibp_defect(fa) / l2rho_sq(fa));
        Field fz = smp.vanishing_at_zero(g);
        tri = std::max(tri, tricomi_defect(fz) / l2rho_sq(fz));
    }
    o.require(comm <= 1e-10, "commutator defect " + std::to_string(comm));
    o.require(ibp <= 1e-9, "ibp defect " + std::to_string(ibp));
    o.require(tri <= 1e-9, "tricomi defect " + std::to_string(tri));
    return o;
}

// 2. norm identities
Outcome criterion2() {
    Outcome o;
    auto g = Grid::get(kN);
    double e0err = std::abs(norm_H(e0_field(g)) - 1.0);
    o.require(e0err <= 1e-9, "e0 norm deviation " + std::to_string(e0err));
    FieldSampler smp(8);
    for (int t = 0; t < 100; ++t) {
        Field f = smp.admissible(g);
        double h2 = inner_H(f, f), fe = e0_component(f), y2 = inner_Y(f, f);
        o.require(std::abs(h2 - fe * fe - y2) <= 1e-9 * h2, "orthogonality identity");
        double hn = std::sqrt(h2), yn = std::sqrt(y2);
        o.require(yn <= hn * (1 + 1e-9) && yn >= 0.5 * hn * (1 - 1e-9), "norm equivalence");
        if (!o.pass) break;
    }
    return o;
}

// 3. coercivity
Outcome criterion3() {
    Outcome o;
    auto g = Grid::get(kN);
    FieldSampler smp(9);
    double worst = -1e9;
    for (int t = 0; t < 1000; ++t) worst = std::max(worst, coercivity_ratio(smp.admissible(g)));
    o.require(worst <= -0.375 + 1e-8, "max ratio " + std::to_string(worst));
    o.detail = "max coercivity ratio " + std::to_string(worst);
    return o;
}

// 4. a = 1 exponential return to equilibrium in the weighted norm
Outcome criterion4() {
    Outcome o;
    auto g = Grid::get(kN);
    Trajectory traj = evolve(make(g, 1.0, 0.01, 0.0), 1.0, 40.0, 0.5);
    Field sine = -1.0 * equilibrium_field(g);
    std::vector<double> ts, ln;
    for (size_t i = 0; i < traj.rows.size(); ++i) {
        double tau = traj.rows[i].tau;
        if (tau < 5.0 || tau > 40.0) continue;
        double d = norm_H(traj.checkpoints[i] + sine);
        if (d > 0) {
            ts.push_back(tau);
            ln.push_back(std::log(d));
        }
    }
    double rate = -lsq_slope(ts, ln);
    char buf[128];
    std::snprintf(buf, sizeof buf, "fitted decay rate %.4f (need >= 1/3)", rate);
    o.require(rate >= 1.0 / 3.0, buf);
    o.detail = buf;
    return o;
}

// 5. profile sweep
Outcome criterion5() {
    Outcome o;
    auto lo = continue_in_a(1.0, 0.95, -0.01, 1e-10, kN, 200.0);
    auto hi = continue_in_a(1.0, 1.05, 0.01, 1e-10, kN, 200.0);
    std::vector<ProfileRecord> all(lo.rbegin(), lo.rend());
    for (auto& r : hi)
        if (std::abs(r.a - 1.0) > 1e-12) all.push_back(std::move(r));
    o.require(all.size() == 11, "expected 11 profiles, got " + std::to_string(all.size()));
    for (const auto& r : all) {
        char tag[32];
        std::snprintf(tag, sizeof tag, "a=%.2f", r.a);
        double d = r.a - 1.0;
        o.require(r.residual_h < 1e-10,
                  std::string(tag) + " residual_h=" + std::to_string(r.residual_h));
        if (std::abs(d) > 1e-12)
            o.require(r.c_omega_a * d > 0.0, std::string(tag) + " sign(c)");
        o.require(std::abs(r.c_omega_a - d) <= 0.5 * std::abs(d) + 1e-14,
                  std::string(tag) + " |c-(a-1)|");
        o.require(std::abs(r.H_omega_at_pi + 1.0) < 0.1,
                  std::string(tag) + " |H(pi)+1|=" + std::to_string(std::abs(r.H_omega_at_pi + 1)));
        o.require(std::abs(r.alpha - 2.0 * (1.0 - r.a)) <= 0.5 * std::abs(d) + 1e-14,
                  std::string(tag) + " |alpha-2(1-a)|");
    }
    return o;
}

// 6. regularity cross-check
Outcome criterion6() {
    Outcome o;
    auto g = Grid::get(kN);
    for (double a : {0.98, 1.02}) {
        ProfileRecord rec = relax(equilibrium_field(g), a, 1e-10, 150.0);
        HolderFit fit = holder_fit(rec);
        double target = rec.alpha + 1.0;
        char buf[128];
        std::snprintf(buf, sizeof buf, "a=%.2f holder slope %.4f vs %.4f", a, fit.slope, target);
        o.require(std::abs(fit.slope - target) <= 0.05 * std::abs(target), buf);
        OdeReconstruction ode = ode_reconstruct(rec, Grid::pi_ / 8);
        std::snprintf(buf, sizeof buf, "a=%.2f ode mismatch %.2e", a, ode.max_rel_mismatch);
        o.require(ode.max_rel_mismatch <= 0.01, buf);
    }
    return o;
}

std::string verdict_lines(const std::vector<TheoremVerdict>& v, Outcome& o) {
    std::ostringstream os;
    for (const auto& x : v) {
        o.require(x.pass, x.claim_id);
        os << " [" << (x.pass ? "ok" : "FAIL") << " " << x.claim_id << " measured="
           << x.measured << " target=" << x.bound_or_target << "]";
    }
    return os.str();
}

// 7. blowup reproduction at a = 0.97
Outcome criterion7() {
    Outcome o;
    auto g = Grid::get(kN);
    ProfileRecord rec = relax(equilibrium_field(g), 0.97, 1e-10, 150.0);
    Trajectory traj = evolve(make(g, 1.0, 0.01, 0.0), 0.97, 170.0, 0.5);
    auto v = blowup_report(traj, rec);
    o.detail = verdict_lines(v, o);
    return o;
}

// 8. global decay reproduction at a = 1.03
Outcome criterion8() {
    Outcome o;
    auto g = Grid::get(kN);
    ProfileRecord rec = relax(equilibrium_field(g), 1.03, 1e-10, 150.0);
    Trajectory traj = evolve(make(g, 1.0, 0.01, 0.0), 1.03, 200.0, 0.5);
    auto v = decay_report(traj, rec);
    o.detail = verdict_lines(v, o);
    return o;
}

// 9. non-odd robustness
Outcome criterion9() {
    Outcome o;
    auto g = Grid::get(kN);
    for (double a : {0.97, 1.03}) {
        Trajectory traj = evolve(make(g, 1.0, 0.01, 0.005), a, 150.0, 0.5);
        auto v = nonodd_report(traj);
        o.detail += verdict_lines(v, o);
    }
    return o;
}

// 10. structural invariants
Outcome criterion10() {
    Outcome o;
    auto g = Grid::get(kN);
    Trajectory traj = evolve(make(g, 1.0, 0.01, 0.0), 0.97, 20.0, 0.5);
    double mean = 0.0, even = 0.0;
    for (const auto& ck : traj.checkpoints) {
        mean = std::max(mean, std::abs(ck.coeffs()[0].real()) * 2.0 * Grid::pi_);
        for (const auto& z : ck.coeffs()) even = std::max(even, std::abs(z.real()));
    }
    o.require(mean <= 1e-10, "mean drift " + std::to_string(mean));
    o.require(even <= 1e-9, "odd-parity defect " + std::to_string(even));

    auto g2 = Grid::get(256);
    Field w0 = make(g2, 1.0, 0.01, 0.0);
    double errs[2];
    Field ref;
    for (int lvl = 0; lvl < 3; ++lvl) {
        double dt = 0.008 / (1 << lvl);
        RescaledState s = RescaledState::start(w0, 0.97);
        int n = (int)std::lround(0.8 / dt);
        for (int i = 0; i < n; ++i) s = step(s, dt);
        if (lvl > 0) errs[lvl - 1] = sup_norm(s.omega - ref);
        ref = s.omega;
    }
    char buf[96];
    std::snprintf(buf, sizeof buf, "dt-halving error ratio %.1f (need >= 10)", errs[0] / errs[1]);
    o.require(errs[0] / errs[1] >= 10.0, buf);
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: acceptance <criterion 1-10>\n";
        return 2;
    }
    int n = std::atoi(argv[1]);
    Outcome o;
    try {
        switch (n) {
            case 1: o = criterion1(); break;
            case 2: o = criterion2(); break;
            case 3: o = criterion3(); break;
            case 4: o = criterion4(); break;
            case 5: o = criterion5(); break;
            case 6: o = criterion6(); break;
            case 7: o = criterion7(); break;
            case 8: o = criterion8(); break;
            case 9: o = criterion9(); break;
            case 10: o = criterion10(); break;
            default: std::cerr << "usage: acceptance <criterion 1-10>\n"; return 2;
        }
    } catch (const std::exception& e) {
        o.pass = false;
        o.detail = std::string("exception: ") + e.what();
    }
    std::cout << "criterion " << n << ": " << (o.pass ? "PASS" : "FAIL")
              << (o.detail.empty() ? "" : " -- " + o.detail) << "\n";
    return o.pass ? 0 : 1;
}
