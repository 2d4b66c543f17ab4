#include "resonance/mollifier.hpp"

#include <cmath>

#include "resonance/summation.hpp"

namespace resonance {

namespace {

double smoothstep(double v) {
  if (v <= 0.0) return 0.0;
  if (v >= 1.0) return 1.0;
  const double g0 = std::exp(-1.0 / v);
  const double g1 = std::exp(-1.0 / (1.0 - v));
  return g0 / (g0 + g1);
}

double compute_bump_integral() {
  // The ramps are smooth with all derivatives vanishing at their ends, so
  // the trapezoid rule converges faster than any power of the step.
  constexpr int kSteps = 1 << 14;
  const double h = 1.0 / kSteps;
  CompensatedSum ramp;
  for (int j = 1; j < kSteps; ++j) ramp.add(smoothstep(j * h));
  ramp.add(0.5);  // endpoint v = 1 with weight 1/2
  const double ramp_integral = ramp.value() * h;
  return 0.25 + 2.0 * 0.125 * ramp_integral;
}

}  // namespace

double bump_psi(double u) {
  if (u <= 0.5 || u >= 1.0) return 0.0;
  if (u < 0.625) return smoothstep((u - 0.5) * 8.0);
  if (u <= 0.875) return 1.0;
  return smoothstep((1.0 - u) * 8.0);
}

double bump_integral() {
  static const double value = compute_bump_integral();
  return value;
}

double gaussian_phi(double t) { return std::exp(-0.5 * t * t); }

}  // namespace resonance
