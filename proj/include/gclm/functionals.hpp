#pragma once

#include "gclm/spectral.hpp"

namespace gclm {

// e0 = cos x - 1, the unit-norm direction projected out of Y.
Field e0_field(const std::shared_ptr<const Grid>& g);

// Weighted H1 inner product (1/4pi) <f_x, g_x rho>, rho = sin^-2(x/2),
// evaluated by staggered-grid quadrature so the weight pole is never hit.
double inner_H(const Field& f, const Field& g);

// ((1/4pi) int f_x^2 rho)^{1/2}; throws "weight-singularity" when the
// integrand blows up at the nodes flanking x = 0 (signals f_x(0) != 0).
double norm_H(const Field& f);

// (norm_H^2 + int f_xx^2 cos^2(x/2))^{1/2}.
double norm_X(const Field& f);

// Equivalent X seminorm ||d/dx(sin x f_x) rho^{1/2}||_{L2}.
double dx_seminorm(const Field& f);

// f_e = <f, e0>_H.
double e0_component(const Field& f);

// <f, g - g_e e0>_H.
double inner_Y(const Field& f, const Field& g);
double norm_Y(const Field& f);

// Linearized operators around the equilibrium -sin x.
Field apply_L1(const Field& f);
Field apply_A(const Field& f);
Field apply_La(const Field& f, double a);

// <L1 f, f>_Y / ||f||_Y^2, expected <= -3/8 on admissible fields.
double coercivity_ratio(const Field& f);

// |<sin x f_x, f rho> - (1/2)<f^2, rho>| (integration-by-parts identity).
double ibp_defect(const Field& f);

// |int cot(x/2) f Hf + pi Hf(0)^2| (Tricomi identity, zero-mean inputs).
double tricomi_defect(const Field& f);

// ||f rho^{1/2}||_inf / ||f_x rho^{1/2}||_{L2} (effective embedding constant).
double weighted_linf_ratio(const Field& f);

// ||f rho^{1/2}||_{L2}^2, used to scale identity-defect tolerances.
double l2rho_sq(const Field& f);

}  // namespace gclm
