#pragma once

#include "gclm/profile.hpp"

#include <string>
#include <vector>

namespace gclm {

struct TheoremVerdict {
    std::string claim_id;
    double measured = 0.0;
    double bound_or_target = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    std::string note;
};

// alpha(a) = (c + (1-a) H(pi)) / (a H(pi)); the profile vanishes at pi like
// |x-pi|^{alpha+1}.
double alpha_from_formula(double c, double H_at_pi, double a);

// Least-squares slope of log|omega(x)| vs log|x-pi| near pi; expected
// alpha(a)+1.  Returns (slope, window_lo, window_hi).
struct HolderFit {
    double slope;
    double window_lo, window_hi;
};
HolderFit holder_fit(const ProfileRecord& rec);

// Solve the steady ODE from x0: omega(x) = omega(x0) exp int (c+u_x)/(a u).
// Returns sample points and reconstructed values on (x0, pi - 0.1).
struct OdeReconstruction {
    std::vector<double> x;
    std::vector<double> reconstructed;
    std::vector<double> actual;
    double max_rel_mismatch;
};
OdeReconstruction ode_reconstruct(const ProfileRecord& rec, double x0);

// Quantitative checks for a collapsing run (a < 1).
std::vector<TheoremVerdict> blowup_report(const Trajectory& traj, const ProfileRecord& rec);

// Quantitative checks for a decaying run (a > 1).
std::vector<TheoremVerdict> decay_report(const Trajectory& traj, const ProfileRecord& rec);

// Robustness checks for zero-mean, possibly non-odd data.
std::vector<TheoremVerdict> nonodd_report(const Trajectory& traj);

bool all_pass(const std::vector<TheoremVerdict>& v);

std::string verdicts_to_json(const std::vector<TheoremVerdict>& v, const std::string& config_echo);

}  // namespace gclm
