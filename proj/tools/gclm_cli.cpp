// Command-line laboratory for self-similar profiles of the gCLM equation.

#include "gclm/analysis.hpp"
#include "gclm/dynamics.hpp"
#include "gclm/functionals.hpp"
#include "gclm/profile.hpp"
#include "gclm/testfields.hpp"

#include "CLI11.hpp"
#include <nlohmann/json.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <set>

namespace fs = std::filesystem;
using nlohmann::json;
using namespace gclm;

namespace {

constexpr const char* kVersion = "gclm 1.0.0";

struct RunConfig {
    int n = 1024;
    double a = 1.0;
    bool has_a = false;
    double a_lo = 0.95, a_hi = 1.05, a_step = 0.01;
    bool has_range = false;
    double tol = 1e-10;
    double horizon = -1.0;  // command-specific default when negative
    double stride = 0.5;
    uint64_t seed = 7;
    int jobs = 2;
    std::string out = "out";
    std::string cmd;
};

std::string echo(const RunConfig& c) {
    json j = {{"cmd", c.cmd},   {"n", c.n},           {"tol", c.tol},    {"horizon", c.horizon},
              {"seed", c.seed}, {"stride", c.stride}, {"jobs", c.jobs},  {"out", c.out},
              {"version", kVersion}};
    if (c.has_a) j["a"] = c.a;
    if (c.has_range) j["a_range"] = {c.a_lo, c.a_hi, c.a_step};
    return j.dump();
}

Field from_expr(const std::shared_ptr<const Grid>& g, double s1, double s2, double c_pair) {
    // -s1 sin x + s2 sin 2x + c_pair (cos 2x - cos x)
    std::vector<double> v(g->N());
    for (int j = 0; j < g->N(); ++j) {
        double x = g->node(j);
        v[j] = -s1 * std::sin(x) + s2 * std::sin(2 * x) +
               c_pair * (std::cos(2 * x) - std::cos(x));
    }
    return Field::from_values(g, v);
}

void ensure_out(const RunConfig& c) { fs::create_directories(c.out); }

void write_text(const std::string& path, const std::string& text) {
    std::ofstream os(path);
    if (!os) throw error("io-error", "cannot write " + path);
    os << text;
    if (text.empty() || text.back() != '\n') os << "\n";
}

// ---------------------------------------------------------------- lemmas ----

struct Check {
    std::string name;
    double measured;
    double limit;
    bool pass;
};

int cmd_lemmas(const RunConfig& cfg) {
    ensure_out(cfg);
    auto g = Grid::get(cfg.n);
    std::vector<Check> checks;
    auto add = [&](const std::string& name, double m, double lim) {
        checks.push_back({name, m, lim, m <= lim});
    };

    // Hilbert multiplier exactness per mode.
    double worst = 0.0;
    for (int k = 1; k <= g->cutoff(); ++k) {
        std::vector<cplx> c(g->nmodes(), cplx(0.0, 0.0));
        c[k] = cplx(0.5, 0.0);  // cos kx
        Field f(g, c);
        Field h = hilbert(f);
        worst = std::max(worst, std::abs(h.coeffs()[k] - cplx(0.0, -0.5)));
    }
    add("hilbert-multiplier", worst, 1e-12);

    FieldSampler smp(cfg.seed);
    double anti = 0.0, par = 0.0, comm = 0.0, gauge = 0.0, upi = 0.0;
    for (int t = 0; t < 100; ++t) {
        Field f = smp.zero_mean(g), h = smp.zero_mean(g);
        // antisymmetry of H in plain L2
        auto fv = f.values(), hv = h.values();
        auto Hf = hilbert(f).values(), Hh = hilbert(h).values();
        double i1 = 0, i2 = 0;
        for (int j = 0; j < g->N(); ++j) {
            i1 += Hf[j] * hv[j];
            i2 += fv[j] * Hh[j];
        }
        anti = std::max(anti, std::abs(i1 + i2) * g->spacing());
        comm = std::max(comm, commutator_defect(f));
        auto [u, ux] = velocity(f);
        gauge = std::max(gauge, std::abs(at0(u)));
    }
    {  // parity: H maps odd to even and even zero-mean to odd
        Field odd = smp.zero_mean(g);
        for (auto& z : odd.coeffs()) z = cplx(0.0, z.imag());
        Field ho = hilbert(odd);
        for (const auto& z : ho.coeffs()) par = std::max(par, std::abs(z.imag()));
        Field even = smp.zero_mean(g);
        for (auto& z : even.coeffs()) z = cplx(z.real(), 0.0);
        even.coeffs()[0] = cplx(0.0, 0.0);
        Field he = hilbert(even);
        for (const auto& z : he.coeffs()) par = std::max(par, std::abs(z.real()));
        auto [u, ux] = velocity(odd);
        upi = std::abs(eval_at(u, Grid::pi_));
    }
    add("hilbert-antisymmetry", anti, 1e-10);
    add("hilbert-parity", par, 1e-10);
    add("velocity-gauge", gauge, 1e-12);
    add("velocity-odd-u-at-pi", upi, 1e-12);
    add("commutator-defect", comm, 1e-10);

    add("e0-unit-norm", std::abs(norm_H(e0_field(g)) - 1.0), 1e-9);
    double orth = 0.0, equiv_lo = 0.0, equiv_hi = 0.0;
    for (int t = 0; t < 100; ++t) {
        Field f = smp.admissible(g);
        double h2 = inner_H(f, f), fe = e0_component(f), y2 = inner_Y(f, f);
        orth = std::max(orth, std::abs(h2 - fe * fe - y2) / h2);
        double hn = std::sqrt(h2), yn = std::sqrt(y2);
        equiv_lo = std::max(equiv_lo, 0.5 * hn - yn);  // must be <= 0
        equiv_hi = std::max(equiv_hi, yn - hn);        // must be <= 0
    }
    add("orthogonality-identity", orth, 1e-9);
    add("equivalence-lower", equiv_lo, 1e-9);
    add("equivalence-upper", equiv_hi, 1e-9);

    double ibp = 0.0, tri = 0.0, linf_max = 0.0;
    for (int t = 0; t < 100; ++t) {
        Field f = smp.admissible(g);
        ibp = std::max(ibp, ibp_defect(f) / l2rho_sq(f));
        Field z = smp.vanishing_at_zero(g);
        tri = std::max(tri, tricomi_defect(z) / l2rho_sq(z));
        linf_max = std::max(linf_max, weighted_linf_ratio(f));
    }
    add("ibp-defect", ibp, 1e-9);
    add("tricomi-defect", tri, 1e-9);
    checks.push_back({"weighted-linf-constant", linf_max, 0.0, true});  // recorded only

    double coer = -1e9;
    for (int t = 0; t < 1000; ++t) coer = std::max(coer, coercivity_ratio(smp.admissible(g)));
    add("coercivity-max-ratio", coer, -0.375 + 1e-8);

    // Quadrature convergence of the e0 norm under grid refinement.
    double prev = 1e300;
    bool mono = true;
    for (int n : {64, 128, 256, 512, 1024}) {
        if (n > cfg.n) break;
        double err = std::abs(norm_H(e0_field(Grid::get(n))) - 1.0);
        if (err > prev + 1e-15) mono = false;
        prev = err;
    }
    checks.push_back({"quadrature-convergence", prev, 1e-9, mono && prev <= 1e-9});

    json arr = json::array();
    bool all = true;
    std::string first_fail;
    for (const auto& c : checks) {
        arr.push_back({{"name", c.name}, {"measured", c.measured}, {"limit", c.limit},
                       {"pass", c.pass}});
        if (!c.pass && first_fail.empty()) first_fail = c.name;
        all = all && c.pass;
    }
    json out = {{"checks", arr}, {"all_pass", all}, {"config", echo(cfg)}};
    write_text(cfg.out + "/lemmas.json", out.dump(2));
    if (!all) {
        std::cerr << "lemmas: first failing check: " << first_fail << "\n";
        return 1;
    }
    std::cout << "lemmas: all " << checks.size() << " checks pass\n";
    return 0;
}

// ------------------------------------------------------- relax and sweep ----

void append_summary(std::ostream& os, const ProfileRecord& r) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "%.6g,%.12g,%.12g,%.12g\n", r.a, r.c_omega_a, r.alpha,
                  r.residual_h);
    os << buf;
}

std::string profile_path(const RunConfig& cfg, double a) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "/profile_a%.3f.json", a);
    return cfg.out + buf;
}

int cmd_relax(const RunConfig& cfg) {
    ensure_out(cfg);
    double horizon = cfg.horizon > 0 ? cfg.horizon : 200.0;
    auto g = Grid::get(cfg.n);
    ProfileRecord rec = relax(equilibrium_field(g), cfg.a, cfg.tol, horizon);
    save_profile(rec, profile_path(cfg, cfg.a));
    std::ofstream os(cfg.out + "/relax_summary.csv");
    os << "# " << echo(cfg) << "\na,c_omega_a,alpha,residual_h\n";
    append_summary(os, rec);
    std::cout << "relax: a=" << cfg.a << " c=" << rec.c_omega_a << " residual_h=" << rec.residual_h
              << (rec.converged ? "" : " (stagnated at resolution floor)") << "\n";
    return 0;
}

int cmd_sweep(const RunConfig& cfg) {
    ensure_out(cfg);
    double horizon = cfg.horizon > 0 ? cfg.horizon : 200.0;
    if (cfg.a_step <= 0) throw error("invalid-step", "a-range step must be positive");
    auto down = [&] {
        return cfg.a_lo < 1.0 ? continue_in_a(1.0, cfg.a_lo, -cfg.a_step, cfg.tol, cfg.n, horizon)
                              : std::vector<ProfileRecord>{};
    };
    auto up = [&] {
        return cfg.a_hi > 1.0 ? continue_in_a(1.0, cfg.a_hi, cfg.a_step, cfg.tol, cfg.n, horizon)
                              : std::vector<ProfileRecord>{};
    };
    std::vector<ProfileRecord> lo, hi;
    if (cfg.jobs > 1) {
        auto fut = std::async(std::launch::async, down);
        hi = up();
        lo = fut.get();
    } else {
        lo = down();
        hi = up();
    }
    std::vector<ProfileRecord> all;
    for (auto it = lo.rbegin(); it != lo.rend(); ++it) all.push_back(std::move(*it));
    for (auto& r : hi) {
        if (!all.empty() && std::abs(r.a - all.back().a) < 1e-12) continue;
        all.push_back(std::move(r));
    }
    std::ofstream os(cfg.out + "/sweep_summary.csv");
    os << "# " << echo(cfg) << "\na,c_omega_a,alpha,residual_h\n";
    bool signs_ok = true;
    for (const auto& r : all) {
        save_profile(r, profile_path(cfg, r.a));
        append_summary(os, r);
        if (std::abs(r.a - 1.0) > 1e-12 && r.c_omega_a * (r.a - 1.0) <= 0.0) signs_ok = false;
    }
    std::cout << "sweep: " << all.size() << " profiles, sign(c)=sign(a-1) "
              << (signs_ok ? "holds" : "VIOLATED") << "\n";
    return signs_ok ? 0 : 1;
}

// ------------------------------------------------------ trajectory runs ----

int run_trajectory(const RunConfig& cfg, const std::string& verdict_file, bool want_profile) {
    ensure_out(cfg);
    auto g = Grid::get(cfg.n);
    double horizon = cfg.horizon > 0 ? cfg.horizon : (cfg.cmd == "blowup" ? 170.0 : 200.0);
    double cpair = cfg.cmd == "nonodd" ? 0.005 : 0.0;
    Field w0 = from_expr(g, 1.0, 0.01, cpair);
    Trajectory traj = evolve(w0, cfg.a, horizon, cfg.stride);
    {
        std::ofstream os(cfg.out + "/trajectory_" + cfg.cmd + ".csv");
        write_csv(traj, os, echo(cfg));
    }
    std::vector<TheoremVerdict> v;
    if (cfg.cmd == "nonodd") {
        v = nonodd_report(traj);
    } else {
        ProfileRecord rec = relax(equilibrium_field(g), cfg.a, cfg.tol,
                                  cfg.horizon > 0 ? cfg.horizon : 150.0);
        if (want_profile) save_profile(rec, profile_path(cfg, cfg.a));
        v = cfg.a < 1.0 ? blowup_report(traj, rec) : decay_report(traj, rec);
        // plot-ready companion: log(T-t) or log(t) vs log(lambda)
        std::ofstream ps(cfg.out + "/lambda_fit_" + cfg.cmd + ".dat");
        if (cfg.a < 1.0) {
            auto [T, r] = estimate_blowup_time(traj);
            (void)r;
            for (const auto& row : traj.rows)
                ps << std::log(T - row.t_phys) << " " << std::log(row.lambda) << "\n";
        } else {
            for (const auto& row : traj.rows)
                if (row.t_phys > 0)
                    ps << std::log(row.t_phys) << " " << std::log(row.lambda) << "\n";
        }
    }
    write_text(cfg.out + "/" + verdict_file, verdicts_to_json(v, echo(cfg)));
    for (const auto& x : v)
        std::cout << (x.pass ? "  pass  " : "  FAIL  ") << x.claim_id
                  << "  measured=" << x.measured << " target=" << x.bound_or_target << "\n";
    return all_pass(v) ? 0 : 1;
}

int cmd_evolve(const RunConfig& cfg) {
    ensure_out(cfg);
    auto g = Grid::get(cfg.n);
    double horizon = cfg.horizon > 0 ? cfg.horizon : 40.0;
    Field w0 = from_expr(g, 1.0, 0.01, 0.0);
    Trajectory traj = evolve(w0, cfg.a, horizon, cfg.stride);
    std::ofstream os(cfg.out + "/trajectory_evolve.csv");
    write_csv(traj, os, echo(cfg));
    std::cout << "evolve: " << traj.rows.size() << " samples to tau=" << horizon << "\n";
    return 0;
}

int cmd_report(const RunConfig& cfg) {
    bool all = true;
    int nfiles = 0;
    for (const auto& e : fs::directory_iterator(cfg.out)) {
        std::string name = e.path().filename().string();
        if (e.path().extension() != ".json") continue;
        if (name.rfind("verdicts_", 0) != 0 && name != "lemmas.json") continue;
        std::ifstream is(e.path());
        json j;
        try {
            is >> j;
        } catch (...) {
            continue;
        }
        if (!j.contains("all_pass")) continue;
        ++nfiles;
        bool p = j["all_pass"];
        all = all && p;
        std::cout << (p ? "pass  " : "FAIL  ") << name << "\n";
    }
    if (nfiles == 0) {
        std::cerr << "report: no verdict files in " << cfg.out << "\n";
        return 2;
    }
    return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"pseudo-spectral gCLM laboratory"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string config_path;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", config_path, "JSON config file (flags override)");
        sub->add_option("--out", cfg.out, "output directory");
        sub->add_option("--n", cfg.n, "grid resolution");
        sub->add_option("--tol", cfg.tol, "relaxation tolerance");
        sub->add_option("--horizon", cfg.horizon, "rescaled-time horizon");
        sub->add_option("--stride", cfg.stride, "sampling stride in tau");
        sub->add_option("--seed", cfg.seed, "random seed");
        sub->add_option("--jobs", cfg.jobs, "worker count for sweeps");
    };
    auto add_a = [&](CLI::App* sub) {
        return sub->add_option("--a", cfg.a, "advection parameter");
    };

    auto* lemmas = app.add_subcommand("lemmas", "operator identity and coercivity suite");
    add_common(lemmas);
    auto* relaxc = app.add_subcommand("relax", "relax to a self-similar profile");
    add_common(relaxc);
    add_a(relaxc)->required();
    auto* sweep = app.add_subcommand("sweep", "profile continuation over an a-range");
    add_common(sweep);
    std::string range;
    sweep->add_option("--a-range", range, "LO:HI:STEP")->required();
    auto* evolvec = app.add_subcommand("evolve", "integrate the rescaled flow");
    add_common(evolvec);
    add_a(evolvec)->required();
    auto* blowup = app.add_subcommand("blowup", "collapsing run and verdicts (a < 1)");
    add_common(blowup);
    add_a(blowup)->required();
    auto* decay = app.add_subcommand("decay", "decaying run and verdicts (a > 1)");
    add_common(decay);
    add_a(decay)->required();
    auto* nonodd = app.add_subcommand("nonodd", "non-odd robustness run (a != 1)");
    add_common(nonodd);
    add_a(nonodd)->required();
    auto* report = app.add_subcommand("report", "aggregate verdict files");
    add_common(report);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    CLI::App* sub = app.get_subcommands().front();
    cfg.cmd = sub->get_name();

    auto flag_count = [&](const std::string& flag) -> size_t {
        const CLI::Option* opt = sub->get_option_no_throw(flag);
        return opt ? opt->count() : 0;
    };

    try {
        if (!config_path.empty()) {
            std::ifstream is(config_path);
            json j;
            if (!is || !(is >> j)) throw error("bad-config", "cannot parse " + config_path);
            auto take = [&](const char* key, auto& dst, const std::string& flag) {
                if (j.contains(key) && flag_count(flag) == 0)
                    dst = j[key].template get<std::decay_t<decltype(dst)>>();
            };
            take("n", cfg.n, "--n");
            take("a", cfg.a, "--a");
            take("tol", cfg.tol, "--tol");
            take("horizon", cfg.horizon, "--horizon");
            take("stride", cfg.stride, "--stride");
            take("seed", cfg.seed, "--seed");
            take("jobs", cfg.jobs, "--jobs");
            take("out", cfg.out, "--out");
            if (j.contains("a") && flag_count("--a") == 0) cfg.has_a = true;
            if (j.contains("a_range") && range.empty())
                range = j["a_range"].get<std::string>();
        }
        cfg.has_a = cfg.has_a || flag_count("--a") > 0;
        if (!range.empty()) {
            if (std::sscanf(range.c_str(), "%lf:%lf:%lf", &cfg.a_lo, &cfg.a_hi, &cfg.a_step) != 3)
                throw error("bad-config", "a-range must be LO:HI:STEP");
            cfg.has_range = true;
        }
        if (cfg.n < 16 || cfg.n % 2 || cfg.tol <= 0 || cfg.stride <= 0 || cfg.jobs < 1)
            throw error("bad-config", "invalid numeric parameter");
        if (cfg.cmd == "blowup" && cfg.a >= 1.0)
            throw error("not-applicable", "blowup needs a < 1");
        if (cfg.cmd == "decay" && cfg.a <= 1.0) throw error("not-applicable", "decay needs a > 1");
        if (cfg.cmd == "nonodd" && cfg.a == 1.0)
            throw error("not-applicable", "nonodd needs a != 1");

        if (cfg.cmd == "lemmas") return cmd_lemmas(cfg);
        if (cfg.cmd == "relax") return cmd_relax(cfg);
        if (cfg.cmd == "sweep") return cmd_sweep(cfg);
        if (cfg.cmd == "evolve") return cmd_evolve(cfg);
        if (cfg.cmd == "report") return cmd_report(cfg);
        return run_trajectory(cfg, "verdicts_" + cfg.cmd + ".json", true);
    } catch (const error& e) {
        std::cerr << cfg.cmd << ": " << e.what() << "\n";
        static const std::set<std::string> usage = {"bad-config",     "invalid-step",
                                                   "not-applicable", "schema-mismatch",
                                                   "io-error",       "bad-grid"};
        return usage.count(e.code) ? 2 : 3;
    } catch (const std::exception& e) {
        std::cerr << cfg.cmd << ": " << e.what() << "\n";
        return 3;
    }
}
