#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gclm/dynamics.hpp"
#include "gclm/functionals.hpp"
#include "gclm/profile.hpp"

#include <cmath>
#include <sstream>

using namespace gclm;

namespace {

auto g = Grid::get(256);

Field make(double (*fn)(double)) {
    std::vector<double> v(g->N());
    for (int j = 0; j < g->N(); ++j) v[j] = fn(g->node(j));
    return Field::from_values(g, v);
}

Field perturbed() {
    return make([](double x) { return -std::sin(x) + 0.01 * std::sin(2 * x); });
}

}  // namespace

TEST_CASE("physical tendency") {
    Field msin = equilibrium_field(g);
    CHECK(sup_norm(rhs_physical(msin, 1.0)) < 1e-13);
    CHECK(sup_norm(rhs_physical(Field::zero(g), 0.7)) == 0.0);
    double a = 0.8;
    Field r = rhs_physical(msin, a);
    auto v = r.values();
    double worst = 0.0;
    for (int j = 0; j < g->N(); ++j) {
        double x = g->node(j);
        worst = std::max(worst, std::abs(v[j] - (a - 1) * std::sin(x) * std::cos(x)));
    }
    CHECK(worst < 1e-12);
}

TEST_CASE("rescaled tendency and normalization") {
    Field msin = equilibrium_field(g);
    auto [r1, c1] = rhs_rescaled(msin, 1.0);
    CHECK(c1 == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(sup_norm(r1) < 1e-13);
    double a = 0.9;
    auto [r, c] = rhs_rescaled(msin, a);
    CHECK(c == doctest::Approx(a - 1.0).epsilon(1e-12));
    auto v = r.values();
    double worst = 0.0;
    for (int j = 0; j < g->N(); ++j) {
        double x = g->node(j);
        double s = std::sin(x / 2);
        worst = std::max(worst, std::abs(v[j] - 2 * (1 - a) * std::sin(x) * s * s));
    }
    CHECK(worst < 1e-12);
}

TEST_CASE("step keeps the equilibrium fixed") {
    RescaledState s = RescaledState::start(equilibrium_field(g), 1.0);
    for (int i = 0; i < 50; ++i) s = step(s, 0.005);
    Field d = s.omega - equilibrium_field(g);
    CHECK(sup_norm(d) < 1e-12);
    CHECK(std::abs(s.log_C) < 1e-12);
    CHECK(s.t_phys == doctest::Approx(s.tau).epsilon(1e-12));
}

TEST_CASE("ledger matches the closed form for slowly varying c") {
    double a = 0.9;
    RescaledState s = RescaledState::start(equilibrium_field(g), a);
    double tau = 0.05;
    int n = 10;
    for (int i = 0; i < n; ++i) s = step(s, tau / n);
    double c = a - 1.0;
    CHECK(s.log_C == doctest::Approx(c * tau).epsilon(0.05));
    CHECK(s.t_phys == doctest::Approx((std::exp(c * tau) - 1.0) / c).epsilon(0.05));
}

TEST_CASE("cfl violation is rejected") {
    RescaledState s = RescaledState::start(perturbed(), 0.9);
    CHECK_THROWS_AS(step(s, 10.0), error);
}

TEST_CASE("parity and mean are conserved") {
    RescaledState s = RescaledState::start(perturbed(), 0.95);
    CHECK(s.odd);
    for (int i = 0; i < 1000; ++i) s = step(s, 0.005);
    double even = 0.0;
    for (const auto& z : s.omega.coeffs()) even = std::max(even, std::abs(z.real()));
    CHECK(even <= 1e-9);
    CHECK(std::abs(s.omega.coeffs()[0].real()) * 2 * Grid::pi_ <= 1e-10);
}

TEST_CASE("stepper is fourth order") {
    double errs[2];
    Field ref;
    for (int lvl = 0; lvl < 3; ++lvl) {
        double dt = 0.008 / (1 << lvl);
        RescaledState s = RescaledState::start(perturbed(), 0.97);
        int n = (int)std::lround(0.8 / dt);
        for (int i = 0; i < n; ++i) s = step(s, dt);
        if (lvl == 0)
            ref = s.omega;
        else {
            errs[lvl - 1] = sup_norm(s.omega - ref);
            ref = s.omega;
        }
    }
    // successive dt-halvings should shrink the defect by about 2^4
    CHECK(errs[0] / errs[1] > 10.0);
}

TEST_CASE("evolve samples and conserves") {
    Trajectory t = evolve(perturbed(), 1.0, 2.0, 0.5);
    REQUIRE(t.rows.size() == 5);
    for (size_t i = 1; i < t.rows.size(); ++i) {
        CHECK(t.rows[i].tau > t.rows[i - 1].tau);
        CHECK(t.rows[i].t_phys > t.rows[i - 1].t_phys);
        CHECK(t.rows[i].lambda > 0.0);
    }
    for (const auto& ck : t.checkpoints)
        CHECK(std::abs(ck.coeffs()[0].real()) * 2 * Grid::pi_ <= 1e-10);
}

TEST_CASE("physical reconstruction") {
    Trajectory t = evolve(perturbed(), 0.97, 1.0, 0.5);
    auto [w0, t0] = reconstruct_physical(t, 0);
    CHECK(t0 == 0.0);
    CHECK(sup_norm(w0 - t.checkpoints[0]) < 1e-14);  // lambda(0) = 1
    auto [w1, t1] = reconstruct_physical(t, 2);
    CHECK(t1 > 0.0);
    CHECK(sup_norm(w1) == doctest::Approx(t.rows[2].sup_norm / t.rows[2].lambda).epsilon(1e-12));
}

TEST_CASE("blowup-time estimate for constant c") {
    // synthetic collapsing run: c constant, lambda = e^{c tau}, t = (e^{c tau}-1)/c
    Trajectory t;
    t.a = 0.97;
    double c = -0.03;
    for (int i = 0; i <= 100; ++i) {
        DiagnosticsRow r{};
        r.tau = i * 1.0;
        r.lambda = std::exp(c * r.tau);
        r.t_phys = (std::exp(c * r.tau) - 1.0) / c;
        r.c_omega = c;
        t.rows.push_back(r);
        t.checkpoints.push_back(equilibrium_field(g));
    }
    auto [T, ratio] = estimate_blowup_time(t);
    CHECK(T == doctest::Approx(-1.0 / c).epsilon(1e-9));
    CHECK(ratio == doctest::Approx(-c).epsilon(1e-6));
}

TEST_CASE("csv schema") {
    Trajectory t = evolve(perturbed(), 1.0, 1.0, 0.5);
    std::ostringstream os;
    write_csv(t, os, "cfg");
    std::string s = os.str();
    CHECK(s.rfind("# cfg\ntau,t_phys,lambda,c_omega,h_norm,x_norm,sup_norm,omega_x_at_pi,"
                  "u_x_at_0,residual_h\n", 0) == 0);
}

TEST_CASE("exact self-similar transfer to the physical flow") {
    // relax a near-1 profile, then march the physical equation and compare
    // against omega_a / (1 + c t)
    ProfileRecord rec = relax(equilibrium_field(g), 0.99, 1e-10, 60.0);
    double c = rec.c_omega_a;
    Field w = rec.omega_a;
    double dt = 0.005, t = 0.0;
    for (int i = 0; i < 20; ++i) {
        w = step_physical(w, 0.99, dt);
        t += dt;
    }
    Field pred = 1.0 / (1.0 + c * t) * rec.omega_a;
    CHECK(sup_norm(w - pred) < 50.0 * rec.residual_sup * t + 1e-8);
}
