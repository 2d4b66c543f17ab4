#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace resonance {

/// F(t) = sum_n c_n exp(-i lambda_n t) with real coefficients and frequencies.
///
/// Grid evaluation advances each term by a fixed rotation and resynchronizes
/// from sincos every kGridBlock points. Blocks are fixed-size and results do
/// not depend on how a caller splits the grid.
class DirichletSeries {
 public:
  static constexpr std::size_t kGridBlock = 256;

  DirichletSeries() = default;
  DirichletSeries(std::vector<double> coefficients, std::vector<double> frequencies);

  /// sum_{n <= x} n^-sigma n^-it.
  static DirichletSeries integers(double sigma, std::uint64_t count);

  std::size_t size() const noexcept { return coefficients_.size(); }
  double max_abs_frequency() const noexcept;
  double coefficient_abs_sum() const noexcept;

  std::complex<double> operator()(double t) const;

  /// out[j] = F(t0 + j h).
  void evaluate_grid(double t0, double h, std::span<std::complex<double>> out) const;

 private:
  std::vector<double> coefficients_;
  std::vector<double> frequencies_;
};

}  // namespace resonance
