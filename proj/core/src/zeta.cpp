#include "resonance/zeta.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "resonance/error.hpp"
#include "resonance/summation.hpp"

namespace resonance {

namespace {

using cd = std::complex<double>;

void check_approx_domain(double sigma, double t, double x) {
  require(sigma >= 0.1, ErrorKind::Domain, "zeta_approx needs sigma >= 0.1");
  require(x >= 2.0, ErrorKind::Domain, "zeta_approx needs x >= 2");
  require(std::abs(t) <= x, ErrorKind::Domain,
          "zeta_approx needs |t| <= x (t = " + std::to_string(t) + ", x = " + std::to_string(x) + ")");
  require(std::abs(cd(1.0 - sigma, -t)) >= 1e-6, ErrorKind::NearPole,
          "s = " + std::to_string(sigma) + " + " + std::to_string(t) + "i is within 1e-6 of the pole");
}

cd approx_correction(double sigma, double t, double x) {
  const cd one_minus_s(1.0 - sigma, -t);
  const double log_x = std::log(x);
  const cd power = std::polar(std::exp((1.0 - sigma) * log_x), -t * log_x);
  return -power / one_minus_s;
}

}  // namespace

cd zeta_approx(double sigma, double t, double x) {
  check_approx_domain(sigma, t, x);
  const auto count = static_cast<std::uint64_t>(std::floor(x));
  CompensatedSum re;
  CompensatedSum im;
  for (std::uint64_t n = 1; n <= count; ++n) {
    const double log_n = std::log(static_cast<double>(n));
    const double mag = std::exp(-sigma * log_n);
    re.add(mag * std::cos(t * log_n));
    im.add(-mag * std::sin(t * log_n));
  }
  return cd(re.value(), im.value()) + approx_correction(sigma, t, x);
}

cd zeta_oracle(double sigma, double t) {
  require(sigma > 0.0, ErrorKind::Domain, "zeta_oracle needs sigma > 0");
  require(!(sigma == 1.0 && t == 0.0), ErrorKind::Domain, "zeta_oracle: s = 1 is the pole");
  const cd s(sigma, t);
  const cd denom = 1.0 - std::pow(cd(2.0, 0.0), 1.0 - s);
  require(std::abs(denom) >= 1e-8, ErrorKind::RemovableSingularity,
          "1 - 2^(1-s) vanishes at s = " + std::to_string(sigma) + " + " + std::to_string(t) + "i");

  // Borwein: eta(s) ~ sum_{k<n} (-1)^k (1 - d_k/d_n) (k+1)^-s with error
  // about 3 (1+2|t|) e^{pi|t|/2} / ((3+sqrt 8)^n |Gamma(s)|); |Gamma(s)|^-1
  // grows like e^{pi|t|/2}, hence the pi|t| term.
  const double rate = std::log(3.0 + std::sqrt(8.0));
  const double need = std::numbers::pi * std::abs(t) + std::log(1.0 + 2.0 * std::abs(t)) + 40.0;
  const auto n = static_cast<std::size_t>(std::ceil(need / rate)) + 10;

  // a_i = n (n+i-1)! 4^i / ((n-i)! (2i)!), a_0 = 1.
  std::vector<double> log_a(n + 1);
  log_a[0] = 0.0;
  for (std::size_t i = 1; i <= n; ++i) {
    const double id = static_cast<double>(i);
    const double nd = static_cast<double>(n);
    log_a[i] = log_a[i - 1] + std::log(4.0) + std::log(nd + id - 1.0) + std::log(nd - id + 1.0) -
               std::log(2.0 * id) - std::log(2.0 * id - 1.0);
  }
  const double peak = *std::max_element(log_a.begin(), log_a.end());
  std::vector<double> scaled(n + 1);
  for (std::size_t i = 0; i <= n; ++i) scaled[i] = std::exp(log_a[i] - peak);

  // tail[k] = sum_{i > k} a_i / sum_i a_i = 1 - d_k/d_n, built from the top.
  std::vector<double> tail(n + 1, 0.0);
  double running = 0.0;
  for (std::size_t i = n; i-- > 0;) {
    running += scaled[i + 1];
    tail[i] = running;
  }
  const double total = running + scaled[0];

  CompensatedSum re;
  CompensatedSum im;
  for (std::size_t k = 0; k < n; ++k) {
    const double log_k1 = std::log(static_cast<double>(k + 1));
    const double mag = tail[k] / total * std::exp(-sigma * log_k1);
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    re.add(sign * mag * std::cos(t * log_k1));
    im.add(-sign * mag * std::sin(t * log_k1));
  }
  return cd(re.value(), im.value()) / denom;
}

cd partial_sum(std::uint64_t M, double t) {
  require(M >= 1, ErrorKind::Parameter, "partial_sum needs M >= 1");
  CompensatedSum re;
  CompensatedSum im;
  for (std::uint64_t n = 1; n <= M; ++n) {
    const double log_n = std::log(static_cast<double>(n));
    const double mag = std::exp(-0.5 * log_n);
    re.add(mag * std::cos(t * log_n));
    im.add(-mag * std::sin(t * log_n));
  }
  return {re.value(), im.value()};
}

DirichletSeries resonator_series(const ResonatorSet& set) {
  std::vector<double> c;
  std::vector<double> f;
  c.reserve(set.size());
  f.reserve(set.size());
  for (const auto& e : set.elements()) {
    c.push_back(e.weight);
    f.push_back(e.value.log_value());
  }
  return DirichletSeries(std::move(c), std::move(f));
}

cd resonator_eval(const ResonatorSet& set, double t) {
  require(set.size() > 0, ErrorKind::Parameter, "resonator_eval needs a nonempty set");
  return resonator_series(set)(t);
}

ZetaApproxEvaluator::ZetaApproxEvaluator(double sigma, double x)
    : sigma_(sigma), x_(x), series_(DirichletSeries::integers(sigma, static_cast<std::uint64_t>(std::floor(x)))) {
  require(sigma >= 0.1, ErrorKind::Domain, "zeta_approx needs sigma >= 0.1");
  require(x >= 2.0, ErrorKind::Domain, "zeta_approx needs x >= 2");
}

cd ZetaApproxEvaluator::correction(double t) const { return approx_correction(sigma_, t, x_); }

cd ZetaApproxEvaluator::operator()(double t) const { return zeta_approx(sigma_, t, x_); }

void ZetaApproxEvaluator::evaluate_grid(double t0, double h, std::span<cd> out) const {
  if (out.empty()) return;
  check_approx_domain(sigma_, t0, x_);
  check_approx_domain(sigma_, t0 + h * static_cast<double>(out.size() - 1), x_);
  series_.evaluate_grid(t0, h, out);
  for (std::size_t j = 0; j < out.size(); ++j) {
    const double t = t0 + h * static_cast<double>(j);
    require(std::abs(cd(1.0 - sigma_, -t)) >= 1e-6, ErrorKind::NearPole, "grid passes within 1e-6 of the pole");
    out[j] += approx_correction(sigma_, t, x_);
  }
}

}  // namespace resonance
