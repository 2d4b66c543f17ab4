#pragma once

#include <complex>
#include <cstdint>
#include <string_view>
#include <vector>

#include "resonance/resonator_set.hpp"

namespace resonance {

enum class Mollifier { Bump, Gaussian };
std::string_view to_string(Mollifier m);
Mollifier mollifier_from_string(std::string_view name);

/// What multiplies |R|^2 in the second moment: zeta(sigma + it) through
/// zeta_approx with x = T, or the partial sum D_M(t).
struct MomentTarget {
  enum class Kind { Zeta, PartialSum } kind = Kind::Zeta;
  std::uint64_t M = 0;

  static MomentTarget zeta() { return {}; }
  static MomentTarget partial_sum(std::uint64_t M) { return {Kind::PartialSum, M}; }
};

struct MomentOptions {
  double epsilon = 0.2;          // bump moments need max element <= T^(1 - epsilon)
  double max_T = 1e5;            // desk cap
  double gate = 1e-3;            // accepted relative change under step halving
  double points_per_period = 8;  // nodes per period of the fastest phase
  int max_halvings = 4;
};

struct MomentReport {
  Mollifier mollifier = Mollifier::Bump;
  MomentTarget target;
  double sigma = 0.0;
  double T = 0.0;
  double t_lo = 0.0;  // positive-t integration range
  double t_hi = 0.0;

  double m1 = 0.0;
  std::complex<double> m2;
  double certificate = 0.0;  // |m2| / m1

  double quad_step = 0.0;
  std::uint64_t quad_points = 0;
  double refinement_delta = 0.0;
  int halvings = 0;

  // Diagonal main terms: bump only (T Psi^(0) sum r^2 and T Psi^(0) sum_{mk=n} r(m) r(n)/k^sigma).
  double m1_predicted = 0.0;
  double m2_predicted = 0.0;
  // Gaussian only: mass of the weight on |t| > T, dropped from both integrals,
  // and the induced bound R(0)^2 * tail_mass on the neglected part of m1.
  double tail_mass = 0.0;
  double tail_bound_m1 = 0.0;

  // Largest |target| over quadrature nodes carrying positive weight. The
  // certificate is a weighted mean of |target| values, so it never exceeds this.
  double peak_t = 0.0;
  double peak_abs = 0.0;
};

/// M1 = int |R|^2 Psi(t/T) dt and M2 = int zeta(sigma + it) |R|^2 Psi(t/T) dt
/// over [T/2, T], trapezoid rule with step halving until both change by less
/// than options.gate. Throws Convergence otherwise.
MomentReport bump_moments(const ResonatorSet& set, double sigma, double T, const MomentOptions& options = {});

/// The Gaussian-mollified pair over sqrt(T) <= |t| <= T with weight
/// Phi((log T / T) t). The negative half is folded in by conjugate symmetry.
MomentReport gaussian_moments(const ResonatorSet& set, double sigma, double T, MomentTarget target,
                              const MomentOptions& options = {});

/// r^2 int_{sqrt T <= |t| <= T} Phi((log T / T) t) dt in closed form.
double gaussian_weight_integral(double T);

struct TailIntegralSample {
  double lambda = 0.0;
  double value = 0.0;  // |sum_{n<=M} n^-sigma int (lambda/n)^(it) Phi((log T/T) t) dt|
  double ratio = 0.0;  // value / max(sqrt T, M^(1-sigma) log M)
};

struct TailIntegralReport {
  std::uint64_t M = 0;
  double sigma = 0.0;
  double T = 0.0;
  double scale = 0.0;  // max(sqrt T, M^(1-sigma) log M)
  std::vector<TailIntegralSample> samples;
  double max_ratio = 0.0;
  double max_ratio_halved = 0.0;  // the same with the quadrature step halved
  double stability = 0.0;         // |max_ratio - max_ratio_halved| / max_ratio_halved
};

/// Samples lambda log-uniformly on [1, M] (lambda = 1 when M = 1) and
/// evaluates the integral over [-sqrt T, sqrt T].
TailIntegralReport tail_integral_check(std::uint64_t M, double sigma, double T, std::size_t lambda_samples);

}  // namespace resonance
