#pragma once

#include "gclm/field.hpp"

#include <utility>

namespace gclm {

// Hilbert transform on the circle: multiplier -i sign(k), zero mean.
Field hilbert(const Field& f);

// Velocity recovery from vorticity: u_x = H(omega), u the periodic
// antiderivative with the gauge u(0) = 0 enforced exactly.
std::pair<Field, Field> velocity(const Field& omega);  // (u, u_x)

// Spectral d/dx.
Field derivative(const Field& f);

// Weighted derivative sin(x) f_x, dealiased.
Field weighted_derivative(const Field& f);

// Max-norm of D_x H f - H(D_x f) - (1/2pi)<f, sin x>.
double commutator_defect(const Field& f);

// Trigonometric interpolation at an arbitrary point.
double eval_at(const Field& f, double x);
// Fast path for x = 0.
double at0(const Field& f);

// Zero modes above the 2/3-rule cutoff.
Field dealias(const Field& f);

// Pointwise product, dealiased.
Field multiply(const Field& f, const Field& g);

double sup_norm(const Field& f);

// Energy fraction in the top octave of retained modes (under-resolution flag).
double tail_fraction(const Field& f);

}  // namespace gclm
