#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "resonance/resonator_set.hpp"

namespace resonance {

/// |zeta_approx(sigma + it, x)| or |D_M(t)| as a function of t.
class ScanEvaluator {
 public:
  static ScanEvaluator zeta(double sigma, double x);
  static ScanEvaluator partial_sum(std::uint64_t M);

  bool is_zeta() const noexcept { return zeta_; }
  double sigma() const noexcept { return sigma_; }
  double x() const noexcept { return x_; }
  std::uint64_t M() const noexcept { return M_; }
  std::string describe() const;

  double operator()(double t) const;
  /// |F(t0 + j h)| for j < out.size().
  void evaluate_grid(double t0, double h, std::vector<double>& out) const;
  /// Typical oscillation scale of F around |t|, used to size refinement brackets.
  double local_scale() const noexcept;

 private:
  bool zeta_ = true;
  double sigma_ = 0.5;
  double x_ = 0.0;
  std::uint64_t M_ = 0;
};

struct ScanOptions {
  std::uint64_t budget = 4096;
  const ResonatorSet* guide = nullptr;
  std::uint64_t seed = 0;
  std::vector<double> extra_candidates;  // always evaluated; counted against the budget
};

struct ScanResult {
  double t_star = 0.0;
  double value = 0.0;  // fresh evaluation at t_star
  double sigma = 0.0;
  double lo = 0.0;
  double hi = 0.0;
  std::uint64_t budget = 0;
  std::uint64_t evaluations = 0;
  std::string strategy;
  std::string evaluator;
};

/// Coarse grid of budget/2 points at a seeded offset, optional guide
/// candidates (the budget/4 largest local maxima of |R| on a cheap
/// pre-scan), then golden-section refinement around the best 5 points with
/// the remaining budget.
ScanResult scan_max(const ScanEvaluator& evaluator, double lo, double hi, const ScanOptions& options);

}  // namespace resonance
