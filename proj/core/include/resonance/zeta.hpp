#pragma once

#include <complex>
#include <cstdint>
#include <span>

#include "resonance/dirichlet.hpp"
#include "resonance/resonator_set.hpp"

namespace resonance {

/// sum_{n <= x} n^-s - x^(1-s)/(1-s), s = sigma + it, with error O(x^-sigma)
/// for |t| <= x. Rejects sigma < 0.1, |t| > x, x < 2 (Domain) and
/// |1 - s| < 1e-6 (NearPole).
std::complex<double> zeta_approx(double sigma, double t, double x);

/// Reference evaluator: the alternating series eta(s) with Borwein's
/// Chebyshev acceleration, zeta(s) = eta(s)/(1 - 2^(1-s)). Accurate to about
/// 1e-10 for sigma >= 0.4 and |t| <= 1e4. Throws Domain at s = 1 and
/// RemovableSingularity where |1 - 2^(1-s)| < 1e-8.
std::complex<double> zeta_oracle(double sigma, double t);

/// D_M(t) = sum_{n <= M} n^(-1/2 - it).
std::complex<double> partial_sum(std::uint64_t M, double t);

/// R(t) = sum_m r(m) m^-it.
std::complex<double> resonator_eval(const ResonatorSet& set, double t);

DirichletSeries resonator_series(const ResonatorSet& set);

/// zeta_approx at fixed (sigma, x), vectorized over uniform grids.
class ZetaApproxEvaluator {
 public:
  ZetaApproxEvaluator(double sigma, double x);

  double sigma() const noexcept { return sigma_; }
  double x() const noexcept { return x_; }
  const DirichletSeries& series() const noexcept { return series_; }

  std::complex<double> correction(double t) const;
  std::complex<double> operator()(double t) const;
  void evaluate_grid(double t0, double h, std::span<std::complex<double>> out) const;

 private:
  double sigma_;
  double x_;
  DirichletSeries series_;
};

}  // namespace resonance
