#pragma once

namespace resonance {

/// Smooth bump: 0 outside [1/2, 1], 1 on [5/8, 7/8], and the smoothstep
/// s(v) = g(v)/(g(v) + g(1 - v)), g(v) = exp(-1/v), on the two ramps.
double bump_psi(double u);

/// Integral of bump_psi over the real line, by trapezoid quadrature on the
/// ramps. Computed on first use and cached. Equals 3/8 up to rounding.
double bump_integral();

/// Phi(t) = exp(-t^2/2).
double gaussian_phi(double t);

}  // namespace resonance
