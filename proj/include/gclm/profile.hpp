#pragma once

#include "gclm/dynamics.hpp"

#include <string>
#include <tuple>
#include <vector>

namespace gclm {

struct ProfileRecord {
    double a = 1.0;
    Field omega_a;
    double c_omega_a = 0.0;
    double residual_h = 0.0;
    double residual_sup = 0.0;
    double H_omega_at_pi = 0.0;
    double alpha = 0.0;
    int grid_N = 0;
    // provenance
    double horizon_used = 0.0;
    double tol = 0.0;
    double parent_a = 1.0;
    bool exploratory = false;  // outside the |a-1| <= 0.05 window
    bool converged = false;    // residual_h reached tol (vs. stagnated at floor)
};

// The equilibrium -sin x on grid g.
Field equilibrium_field(const std::shared_ptr<const Grid>& g);

// Steady-state defect F = (c + u_x) w - a u w_x with c = (a-1) u_x(0).
std::tuple<Field, double, double> residual(const Field& omega, double a);

// Long-time relaxation of the rescaled flow.  Stops when residual_h < tol,
// or when it stagnates (no 10% improvement over a 20-tau window: for a != 1
// the limited profile smoothness puts a resolution floor under the residual,
// so the floor value is recorded and `converged` reports whether tol was
// met).  Throws "no-convergence" if the residual grows 10x, "diverged" as in
// dynamics.
ProfileRecord relax(const Field& omega_init, double a, double tol, double max_horizon);

// March in a from a profile at a_start, seeding each relaxation with the
// previous profile; partial results survive a failing step.
std::vector<ProfileRecord> continue_in_a(double a_start, double a_end, double da, double tol,
                                         int N, double max_horizon = 200.0);

void save_profile(const ProfileRecord& rec, const std::string& path);
ProfileRecord load_profile(const std::string& path);

}  // namespace gclm
