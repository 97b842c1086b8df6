#include "gclm/profile.hpp"

#include "gclm/analysis.hpp"
#include "gclm/functionals.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <fstream>

namespace gclm {

Field equilibrium_field(const std::shared_ptr<const Grid>& g) {
    std::vector<cplx> c(g->nmodes(), cplx(0.0, 0.0));
    c[1] = cplx(0.0, 0.5);  // -sin x
    return Field(g, std::move(c));
}

std::tuple<Field, double, double> residual(const Field& omega, double a) {
    auto [F, c] = rhs_rescaled(omega, a);
    (void)c;
    return {F, norm_H(F), sup_norm(F)};
}

namespace {

ProfileRecord make_record(const RescaledState& s, double tol, double parent_a) {
    ProfileRecord rec;
    rec.a = s.a;
    rec.omega_a = s.omega;
    rec.grid_N = s.omega.N();
    auto [F, res_h, res_sup] = residual(s.omega, s.a);
    (void)F;
    rec.residual_h = res_h;
    rec.residual_sup = res_sup;
    rec.c_omega_a = s.c_omega;
    rec.H_omega_at_pi = eval_at(hilbert(s.omega), Grid::pi_);
    rec.alpha = alpha_from_formula(rec.c_omega_a, rec.H_omega_at_pi, s.a);
    rec.horizon_used = s.tau;
    rec.tol = tol;
    rec.parent_a = parent_a;
    rec.exploratory = std::abs(s.a - 1.0) > 0.05;
    rec.converged = res_h < tol;
    return rec;
}

}  // namespace

ProfileRecord relax(const Field& omega_init, double a, double tol, double max_horizon) {
    RescaledState s = RescaledState::start(dealias(omega_init), a);
    std::vector<double> history;  // residual_h at integer tau
    history.push_back(std::get<1>(residual(s.omega, a)));

    double next_check = 1.0;
    while (s.tau < max_horizon - 1e-9) {
        double dt = std::min(cfl_dt(s), next_check - s.tau);
        s = step(s, dt);
        if (s.tau < next_check - 1e-9) continue;
        next_check += 1.0;

        double res = std::get<1>(residual(s.omega, a));
        history.push_back(res);
        if (norm_H(s.omega) > 1e6) throw error("diverged");
        if (res < tol) break;
        if (history.size() > 20) {
            double ago = history[history.size() - 21];
            if (res > 10.0 * ago) throw error("no-convergence", "residual growing");
            if (history.size() > 25 && res > 0.9 * ago) break;  // stagnated at the floor
        }
    }
    return make_record(s, tol, a);
}

std::vector<ProfileRecord> continue_in_a(double a_start, double a_end, double da, double tol,
                                         int N, double max_horizon) {
    if (da == 0.0 || (a_end - a_start) * da < 0.0)
        throw error("invalid-step", "da must be nonzero and point from a_start to a_end");
    auto g = Grid::get(N);
    Field seed = equilibrium_field(g);
    std::vector<ProfileRecord> out;
    double parent = a_start;
    int steps = (int)std::lround((a_end - a_start) / da);
    for (int i = 0; i <= steps; ++i) {
        double a = a_start + i * da;
        try {
            ProfileRecord rec = relax(seed, a, tol, max_horizon);
            rec.parent_a = parent;
            seed = rec.omega_a;
            parent = a;
            out.push_back(std::move(rec));
        } catch (const error&) {
            break;  // keep what we have
        }
    }
    return out;
}

void save_profile(const ProfileRecord& rec, const std::string& path) {
    nlohmann::json j;
    j["format_version"] = "1";
    j["a"] = rec.a;
    j["N"] = rec.grid_N;
    j["c_omega_a"] = rec.c_omega_a;
    j["H_omega_at_pi"] = rec.H_omega_at_pi;
    j["alpha"] = rec.alpha;
    j["residual_h"] = rec.residual_h;
    std::vector<double> re, im;
    for (const auto& z : rec.omega_a.coeffs()) {
        re.push_back(z.real());
        im.push_back(z.imag());
    }
    j["coeffs_re"] = re;
    j["coeffs_im"] = im;
    j["values"] = rec.omega_a.values();
    j["provenance"] = {{"horizon", rec.horizon_used},   {"tol", rec.tol},
                       {"parent_a", rec.parent_a},      {"exploratory", rec.exploratory},
                       {"converged", rec.converged},    {"residual_sup", rec.residual_sup}};
    std::ofstream os(path);
    if (!os) throw error("io-error", "cannot write " + path);
    os << j.dump(2) << "\n";
}

ProfileRecord load_profile(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw error("io-error", "cannot read " + path);
    nlohmann::json j;
    try {
        is >> j;
    } catch (const nlohmann::json::exception&) {
        throw error("schema-mismatch", "not a profile file");
    }
    if (!j.contains("format_version") || j["format_version"] != "1")
        throw error("schema-mismatch", "missing or unsupported format_version");
    try {
        ProfileRecord rec;
        rec.a = j.at("a");
        rec.grid_N = j.at("N");
        rec.c_omega_a = j.at("c_omega_a");
        rec.H_omega_at_pi = j.at("H_omega_at_pi");
        rec.alpha = j.at("alpha");
        rec.residual_h = j.at("residual_h");
        std::vector<double> re = j.at("coeffs_re"), im = j.at("coeffs_im");
        auto g = Grid::get(rec.grid_N);
        if ((int)re.size() != g->nmodes() || im.size() != re.size())
            throw error("schema-mismatch", "coefficient count");
        std::vector<cplx> c(re.size());
        for (size_t k = 0; k < c.size(); ++k) c[k] = cplx(re[k], im[k]);
        rec.omega_a = Field(g, std::move(c));
        const auto& p = j.at("provenance");
        rec.horizon_used = p.at("horizon");
        rec.tol = p.at("tol");
        rec.parent_a = p.at("parent_a");
        rec.exploratory = p.at("exploratory");
        rec.converged = p.at("converged");
        rec.residual_sup = p.at("residual_sup");
        return rec;
    } catch (const nlohmann::json::exception&) {
        throw error("schema-mismatch", "missing field");
    }
}

}  // namespace gclm
