#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gclm/analysis.hpp"
#include "gclm/functionals.hpp"

#include <cmath>

using namespace gclm;

namespace {

auto g = Grid::get(512);

// synthetic exactly self-similar run built from a profile and constant c
Trajectory synthetic(const Field& omega, double a, double c, int n, double stride,
                     double grad_exponent = 0.0) {
    Trajectory t;
    t.a = a;
    t.grid_N = omega.N();
    double gpi0 = eval_at(derivative(omega), Grid::pi_);
    for (int i = 0; i <= n; ++i) {
        DiagnosticsRow r{};
        r.tau = i * stride;
        r.lambda = std::exp(c * r.tau);
        r.t_phys = (r.lambda - 1.0) / c;
        r.c_omega = c;
        r.sup_norm = sup_norm(omega);
        r.h_norm = 1.0;
        // rescaled gradient chosen so the physical one grows like t^gamma
        r.omega_x_at_pi = gpi0 * std::pow(r.lambda, 1.0 + grad_exponent);
        t.rows.push_back(r);
        t.checkpoints.push_back(omega);
    }
    return t;
}

}  // namespace

TEST_CASE("exponent formula") {
    CHECK(alpha_from_formula(0.0, -1.0, 1.0) == 0.0);
    CHECK(alpha_from_formula(-0.0099, -1.0, 0.99) ==
          doctest::Approx((-0.0099 + 0.01 * (-1.0)) / (0.99 * (-1.0))).epsilon(1e-12));
    CHECK(alpha_from_formula(-0.0099, -1.0, 0.99) == doctest::Approx(0.0201).epsilon(1e-3));
    CHECK_THROWS_AS(alpha_from_formula(0.1, 0.0, 1.0), error);
}

TEST_CASE("holder fit on the sine equilibrium") {
    ProfileRecord rec;
    rec.a = 1.0;
    rec.omega_a = equilibrium_field(g);
    rec.grid_N = g->N();
    HolderFit fit = holder_fit(rec);
    CHECK(fit.slope == doctest::Approx(1.0).epsilon(0.02));
}

TEST_CASE("ode reconstruction of the sine equilibrium") {
    ProfileRecord rec;
    rec.a = 1.0;
    rec.omega_a = equilibrium_field(g);
    rec.c_omega_a = 0.0;
    rec.grid_N = g->N();
    OdeReconstruction ode = ode_reconstruct(rec, Grid::pi_ / 8);
    CHECK(ode.max_rel_mismatch < 1e-3);
    CHECK_THROWS_AS(ode_reconstruct(rec, -1.0), error);
}

TEST_CASE("blowup verdicts on an exact self-similar run") {
    ProfileRecord rec;
    rec.a = 0.97;
    rec.omega_a = equilibrium_field(g);
    rec.c_omega_a = -0.03;
    rec.H_omega_at_pi = -1.0;
    Trajectory t = synthetic(rec.omega_a, 0.97, -0.03, 200, 1.0);
    auto v = blowup_report(t, rec);
    REQUIRE(v.size() == 4);
    for (const auto& x : v) CHECK(x.pass);
    CHECK_THROWS_AS(blowup_report(synthetic(rec.omega_a, 1.03, 0.03, 50, 1.0), rec), error);
}

TEST_CASE("decay verdicts on an exact self-similar run") {
    ProfileRecord rec;
    rec.a = 1.03;
    rec.omega_a = equilibrium_field(g);
    rec.c_omega_a = 0.03;
    rec.H_omega_at_pi = -1.0;
    double gamma = (1.0 - 1.03) * (-1.0) / 0.03;  // = 1
    Trajectory t = synthetic(rec.omega_a, 1.03, 0.03, 300, 1.0, gamma);
    auto v = decay_report(t, rec);
    REQUIRE(v.size() == 3);
    for (const auto& x : v) CHECK(x.pass);
    CHECK_THROWS_AS(decay_report(synthetic(rec.omega_a, 0.97, -0.03, 50, 1.0), rec), error);
}

TEST_CASE("nonodd verdicts") {
    Field omega = equilibrium_field(g);
    omega.coeffs()[2] += cplx(0.0, -0.005);  // + 0.01 sin 2x
    Trajectory t = synthetic(omega, 0.97, -0.03, 200, 1.0);
    auto v = nonodd_report(t);
    REQUIRE(v.size() == 2);
    // constant perturbation: its norm never doubles
    CHECK(v[0].pass);
    CHECK(v[1].pass);
    CHECK(v[1].measured == doctest::Approx(0.03).epsilon(1e-3));
}

TEST_CASE("verdict export") {
    std::vector<TheoremVerdict> v = {{"demo", 1.0, 2.0, 0.1, true, "n"}};
    std::string j = verdicts_to_json(v, "cfg");
    CHECK(j.find("\"demo\"") != std::string::npos);
    CHECK(j.find("\"all_pass\": true") != std::string::npos);
    CHECK(all_pass(v));
}
