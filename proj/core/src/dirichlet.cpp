#include "resonance/dirichlet.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "resonance/error.hpp"
#include "resonance/summation.hpp"

namespace resonance {

namespace {
constexpr std::size_t kLanes = 8;
}

DirichletSeries::DirichletSeries(std::vector<double> coefficients, std::vector<double> frequencies)
    : coefficients_(std::move(coefficients)), frequencies_(std::move(frequencies)) {
  require(coefficients_.size() == frequencies_.size(), ErrorKind::Parameter,
          "Dirichlet series coefficients and frequencies must align");
}

DirichletSeries DirichletSeries::integers(double sigma, std::uint64_t count) {
  std::vector<double> c(count);
  std::vector<double> f(count);
  for (std::uint64_t n = 1; n <= count; ++n) {
    const double log_n = std::log(static_cast<double>(n));
    c[n - 1] = std::exp(-sigma * log_n);
    f[n - 1] = log_n;
  }
  return DirichletSeries(std::move(c), std::move(f));
}

double DirichletSeries::max_abs_frequency() const noexcept {
  double m = 0.0;
  for (const double f : frequencies_) m = std::max(m, std::abs(f));
  return m;
}

double DirichletSeries::coefficient_abs_sum() const noexcept {
  CompensatedSum s;
  for (const double c : coefficients_) s.add(std::abs(c));
  return s.value();
}

std::complex<double> DirichletSeries::operator()(double t) const {
  CompensatedSum re;
  CompensatedSum im;
  for (std::size_t n = 0; n < coefficients_.size(); ++n) {
    const double phase = frequencies_[n] * t;
    re.add(coefficients_[n] * std::cos(phase));
    im.add(-coefficients_[n] * std::sin(phase));
  }
  return {re.value(), im.value()};
}

void DirichletSeries::evaluate_grid(double t0, double h, std::span<std::complex<double>> out) const {
  const std::size_t terms = coefficients_.size();
  const std::size_t padded = (terms + kLanes - 1) / kLanes * kLanes;
  std::vector<double> zr(padded, 0.0), zi(padded, 0.0), rr(padded, 1.0), ri(padded, 0.0);
  for (std::size_t n = 0; n < terms; ++n) {
    rr[n] = std::cos(frequencies_[n] * h);
    ri[n] = -std::sin(frequencies_[n] * h);
  }

  for (std::size_t start = 0; start < out.size(); start += kGridBlock) {
    const std::size_t stop = std::min(out.size(), start + kGridBlock);
    const double t_start = t0 + static_cast<double>(start) * h;
    for (std::size_t n = 0; n < terms; ++n) {
      const double phase = frequencies_[n] * t_start;
      zr[n] = coefficients_[n] * std::cos(phase);
      zi[n] = -coefficients_[n] * std::sin(phase);
    }
    for (std::size_t j = start; j < stop; ++j) {
      std::array<double, kLanes> acc_r{};
      std::array<double, kLanes> acc_i{};
      for (std::size_t n = 0; n < padded; n += kLanes) {
        for (std::size_t l = 0; l < kLanes; ++l) {
          const double a = zr[n + l];
          const double b = zi[n + l];
          acc_r[l] += a;
          acc_i[l] += b;
          zr[n + l] = a * rr[n + l] - b * ri[n + l];
          zi[n + l] = a * ri[n + l] + b * rr[n + l];
        }
      }
      double sr = 0.0;
      double si = 0.0;
      for (std::size_t l = 0; l < kLanes; ++l) {
        sr += acc_r[l];
        si += acc_i[l];
      }
      out[j] = {sr, si};
    }
  }
}

}  // namespace resonance
