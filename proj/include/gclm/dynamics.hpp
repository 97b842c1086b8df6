#pragma once

#include "gclm/spectral.hpp"

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace gclm {

// State of the rescaled flow with the ledger connecting back to physical time.
struct RescaledState {
    double tau = 0.0;
    Field omega;
    double a = 1.0;
    double c_omega = 0.0;  // (a-1) u_x(0), refreshed every step
    double log_C = 0.0;    // log C(tau) = integral of c_omega
    double t_phys = 0.0;   // integral of C(tau)
    bool odd = false;      // parity of the initial data, preserved exactly

    static RescaledState start(Field omega0, double a);
};

struct DiagnosticsRow {
    double tau, t_phys, lambda, c_omega, h_norm, x_norm, sup_norm, omega_x_at_pi, u_x_at_0,
        residual_h;
};

struct Trajectory {
    double a = 1.0;
    int grid_N = 0;
    std::vector<DiagnosticsRow> rows;
    std::vector<Field> checkpoints;  // rescaled field at each sampled row
};

// Physical tendency -a u w_x + u_x w.
Field rhs_physical(const Field& omega, double a);

// Rescaled tendency -a u w_x + (c + u_x) w with c = (a-1) u_x(0).
std::pair<Field, double> rhs_rescaled(const Field& omega, double a);

// Largest stable step 0.4 h / max|a u| for the current state.
double cfl_dt(const RescaledState& s);

// One RK4 step of the rescaled flow with the ledger advanced at matching
// order.  After the update the invariant omega(0) = 0 is restored (odd
// states are projected onto odd fields, which implies it) and a high-order
// exponential filter is applied to the state; the discrete linearization at
// the equilibrium is neutral, so without these the marches never settle.
RescaledState step(const RescaledState& s, double dt);

// Plain RK4 on the physical equation (no ledger, no stabilization).
Field step_physical(const Field& omega, double a, double dt);

DiagnosticsRow diagnostics(const RescaledState& s);

// Integrate to tau = horizon with adaptive dt, sampling every sample_stride.
Trajectory evolve(const Field& omega0, double a, double horizon, double sample_stride);

// (physical field C^{-1} omega, physical time) at sampled row i.
std::pair<Field, double> reconstruct_physical(const Trajectory& traj, size_t i);

// (T, limit of lambda/(T-t) over the final decade) for a collapsing run.
std::pair<double, double> estimate_blowup_time(const Trajectory& traj);

void write_csv(const Trajectory& traj, std::ostream& os, const std::string& header_comment);

}  // namespace gclm
