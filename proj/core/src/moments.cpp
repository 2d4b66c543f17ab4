#include "resonance/moments.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>

#include "resonance/dirichlet.hpp"
#include "resonance/error.hpp"
#include "resonance/mollifier.hpp"
#include "resonance/quadform.hpp"
#include "resonance/summation.hpp"
#include "resonance/zeta.hpp"

namespace resonance {

namespace {

using cd = std::complex<double>;

// Grid chunk; a multiple of the series block so chunking never changes results.
constexpr std::size_t kChunk = 64 * DirichletSeries::kGridBlock;

// Either zeta_approx(sigma, ., x) or a plain Dirichlet polynomial.
class TargetGrid {
 public:
  TargetGrid(double sigma, double T, MomentTarget target) {
    if (target.kind == MomentTarget::Kind::Zeta) {
      zeta_.emplace(sigma, T);
      max_frequency_ = std::log(T);
    } else {
      require(target.M >= 1, ErrorKind::Parameter, "partial-sum target needs M >= 1");
      require(sigma == 0.5, ErrorKind::Parameter, "partial-sum target is defined at sigma = 1/2");
      series_ = DirichletSeries::integers(0.5, target.M);
      max_frequency_ = std::log(static_cast<double>(target.M));
    }
  }

  double max_frequency() const { return max_frequency_; }

  void evaluate(double t0, double h, std::span<cd> out) const {
    if (zeta_) {
      zeta_->evaluate_grid(t0, h, out);
    } else {
      series_.evaluate_grid(t0, h, out);
    }
  }

 private:
  std::optional<ZetaApproxEvaluator> zeta_;
  DirichletSeries series_;
  double max_frequency_ = 0.0;
};

struct Accumulator {
  CompensatedSum m1;
  CompensatedComplexSum m2;
  std::uint64_t points = 0;
  double peak_t = 0.0;
  double peak_abs = -1.0;
};

template <class Weight>
void accumulate(const DirichletSeries& resonator, const TargetGrid& target, const Weight& weight, double t0, double h,
                std::size_t count, double end_factor_first, double end_factor_last, Accumulator& acc) {
  std::vector<cd> r(std::min(count, kChunk));
  std::vector<cd> z(r.size());
  for (std::size_t start = 0; start < count; start += kChunk) {
    const std::size_t len = std::min(kChunk, count - start);
    const double ts = t0 + static_cast<double>(start) * h;
    resonator.evaluate_grid(ts, h, std::span<cd>(r.data(), len));
    target.evaluate(ts, h, std::span<cd>(z.data(), len));
    for (std::size_t j = 0; j < len; ++j) {
      const std::size_t idx = start + j;
      const double t = t0 + static_cast<double>(idx) * h;
      double w = weight(t) * std::norm(r[j]);
      if (idx == 0) w *= end_factor_first;
      if (idx + 1 == count) w *= end_factor_last;
      acc.m1.add(w);
      acc.m2.add(w * z[j]);
      if (w > 0.0 && std::abs(z[j]) > acc.peak_abs) {
        acc.peak_abs = std::abs(z[j]);
        acc.peak_t = t;
      }
    }
    acc.points += len;
  }
}

struct QuadResult {
  double m1 = 0.0;
  cd m2;
  double step = 0.0;
  std::uint64_t points = 0;
  double delta = 0.0;
  int halvings = 0;
  double peak_t = 0.0;
  double peak_abs = 0.0;
};

double relative_change(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

// Composite trapezoid on [lo, hi], halving the step and reusing nodes.
template <class Weight>
QuadResult trapezoid_moments(const DirichletSeries& resonator, const TargetGrid& target, const Weight& weight,
                             double lo, double hi, double omega, const MomentOptions& options) {
  require(options.points_per_period >= 1.0, ErrorKind::Parameter, "points_per_period must be >= 1");
  require(options.max_halvings >= 1, ErrorKind::Parameter, "max_halvings must be >= 1");
  const double h_target = 2.0 * std::numbers::pi / (options.points_per_period * std::max(omega, 1.0));
  auto intervals = static_cast<std::size_t>(std::ceil((hi - lo) / h_target));
  intervals = std::max<std::size_t>(intervals, 2);
  double h = (hi - lo) / static_cast<double>(intervals);

  Accumulator acc;
  accumulate(resonator, target, weight, lo, h, intervals + 1, 0.5, 0.5, acc);
  double prev_m1 = acc.m1.value() * h;
  cd prev_m2 = acc.m2.value() * h;

  QuadResult out;
  for (int level = 1; level <= options.max_halvings; ++level) {
    // New nodes are the midpoints lo + h/2 + j h, a uniform grid of `intervals` points.
    accumulate(resonator, target, weight, lo + 0.5 * h, h, intervals, 1.0, 1.0, acc);
    h *= 0.5;
    intervals *= 2;
    const double m1 = acc.m1.value() * h;
    const cd m2 = acc.m2.value() * h;
    const double delta = std::max(relative_change(m1, prev_m1), relative_change(std::abs(m2), std::abs(prev_m2)));
    out = {m1, m2, h, acc.points, delta, level, acc.peak_t, acc.peak_abs};
    if (delta < options.gate) return out;
    prev_m1 = m1;
    prev_m2 = m2;
  }
  std::ostringstream msg;
  msg << std::setprecision(3) << "quadrature did not converge: relative change " << out.delta << " after "
      << out.halvings << " halvings (gate " << options.gate << ", step " << out.step << ", " << out.points
      << " points)";
  fail(ErrorKind::Convergence, msg.str());
}

void check_common(const ResonatorSet& set, double sigma, double T, const MomentOptions& options) {
  require(set.size() > 0, ErrorKind::Parameter, "moments need a nonempty resonator");
  require(sigma >= 0.1 && sigma <= 1.0, ErrorKind::Domain, "moments need sigma in [0.1, 1]");
  require(T >= 16.0, ErrorKind::Domain, "moments need T >= 16");
  require(T <= options.max_T, ErrorKind::Resource,
          "T = " + std::to_string(T) + " exceeds the desk cap maxT = " + std::to_string(options.max_T));
}

void fill_quadrature(MomentReport& report, const QuadResult& q) {
  report.m1 = q.m1;
  report.m2 = q.m2;
  require(report.m1 > 0.0, ErrorKind::ImplementationFault, "first moment is not positive");
  report.certificate = std::abs(report.m2) / report.m1;
  report.quad_step = q.step;
  report.quad_points = q.points;
  report.refinement_delta = q.delta;
  report.halvings = q.halvings;
  report.peak_t = q.peak_t;
  report.peak_abs = q.peak_abs;
}

}  // namespace

std::string_view to_string(Mollifier m) { return m == Mollifier::Bump ? "bump" : "gaussian"; }

Mollifier mollifier_from_string(std::string_view name) {
  if (name == "bump") return Mollifier::Bump;
  if (name == "gaussian") return Mollifier::Gaussian;
  fail(ErrorKind::Parameter, "unknown mollifier '" + std::string(name) + "' (expected bump or gaussian)");
}

MomentReport bump_moments(const ResonatorSet& set, double sigma, double T, const MomentOptions& options) {
  check_common(set, sigma, T, options);
  require(options.epsilon > 0.0 && options.epsilon < 1.0, ErrorKind::Parameter, "epsilon must lie in (0, 1)");
  const double log_cap = (1.0 - options.epsilon) * std::log(T);
  require(set.max_log_value() <= log_cap + 1e-12, ErrorKind::Parameter,
          "bump moments need max element <= T^(1 - epsilon): log max = " + std::to_string(set.max_log_value()) +
              ", limit " + std::to_string(log_cap));

  const DirichletSeries resonator = resonator_series(set);
  const TargetGrid target(sigma, T, MomentTarget::zeta());
  const double omega = 2.0 * set.max_log_value() + target.max_frequency();
  const auto weight = [T](double t) { return bump_psi(t / T); };
  const QuadResult q = trapezoid_moments(resonator, target, weight, 0.5 * T, T, omega, options);

  MomentReport report;
  report.mollifier = Mollifier::Bump;
  report.target = MomentTarget::zeta();
  report.sigma = sigma;
  report.T = T;
  report.t_lo = 0.5 * T;
  report.t_hi = T;
  fill_quadrature(report, q);
  const double scale = T * bump_integral();
  report.m1_predicted = scale * set.weight_square_sum();
  report.m2_predicted = scale * resonance_ratio(set, sigma).numerator;
  return report;
}

double gaussian_weight_integral(double T) {
  require(T > 1.0, ErrorKind::Domain, "gaussian_weight_integral needs T > 1");
  const double kappa = std::log(T) / T;
  const double c = std::sqrt(std::numbers::pi / 2.0) / kappa;
  return 2.0 * c * (std::erf(kappa * T / std::numbers::sqrt2) - std::erf(kappa * std::sqrt(T) / std::numbers::sqrt2));
}

MomentReport gaussian_moments(const ResonatorSet& set, double sigma, double T, MomentTarget target,
                              const MomentOptions& options) {
  check_common(set, sigma, T, options);
  require(static_cast<double>(set.size()) <= std::sqrt(T), ErrorKind::Parameter,
          "gaussian moments need |set| <= sqrt(T): |set| = " + std::to_string(set.size()));

  const DirichletSeries resonator = resonator_series(set);
  const TargetGrid grid(sigma, T, target);
  const double omega = 2.0 * set.max_log_value() + grid.max_frequency();
  const double kappa = std::log(T) / T;
  const auto weight = [kappa](double t) { return gaussian_phi(kappa * t); };
  QuadResult q = trapezoid_moments(resonator, grid, weight, std::sqrt(T), T, omega, options);
  // The t < 0 half contributes the complex conjugate.
  q.m1 *= 2.0;
  q.m2 = cd(2.0 * q.m2.real(), 0.0);

  MomentReport report;
  report.mollifier = Mollifier::Gaussian;
  report.target = target;
  report.sigma = sigma;
  report.T = T;
  report.t_lo = std::sqrt(T);
  report.t_hi = T;
  fill_quadrature(report, q);
  report.tail_mass = std::sqrt(2.0 * std::numbers::pi) / kappa * std::erfc(kappa * T / std::numbers::sqrt2);
  const double r0 = set.weight_sum();
  report.tail_bound_m1 = r0 * r0 * report.tail_mass;
  return report;
}

TailIntegralReport tail_integral_check(std::uint64_t M, double sigma, double T, std::size_t lambda_samples) {
  require(M >= 1, ErrorKind::Parameter, "tail_integral_check needs M >= 1");
  require(sigma > 0.0 && sigma < 1.0, ErrorKind::Domain, "tail_integral_check needs sigma in (0, 1)");
  require(T >= 16.0, ErrorKind::Domain, "tail_integral_check needs T >= 16");
  require(lambda_samples >= 1, ErrorKind::Parameter, "tail_integral_check needs at least one lambda");

  TailIntegralReport report;
  report.M = M;
  report.sigma = sigma;
  report.T = T;
  const double log_m = std::log(static_cast<double>(M));
  report.scale = std::max(std::sqrt(T), std::exp((1.0 - sigma) * log_m) * log_m);

  const double a = std::sqrt(T);
  const double kappa = std::log(T) / T;
  const double h0 = 2.0 * std::numbers::pi / (8.0 * std::max(log_m, 1.0));
  const auto base_intervals = std::max<std::size_t>(2, static_cast<std::size_t>(std::ceil(a / h0)));

  std::vector<double> coeffs(M);
  std::vector<double> logs(M);
  for (std::uint64_t n = 1; n <= M; ++n) {
    logs[n - 1] = std::log(static_cast<double>(n));
    coeffs[n - 1] = std::exp(-sigma * logs[n - 1]);
  }

  const auto integrate = [&](double log_lambda, std::size_t intervals) {
    std::vector<double> freqs(M);
    for (std::size_t i = 0; i < M; ++i) freqs[i] = logs[i] - log_lambda;
    const DirichletSeries series(coeffs, std::move(freqs));
    const double h = a / static_cast<double>(intervals);
    std::vector<cd> values(intervals + 1);
    series.evaluate_grid(0.0, h, values);
    CompensatedSum s;
    for (std::size_t j = 0; j <= intervals; ++j) {
      const double w = (j == 0 || j == intervals) ? 0.5 : 1.0;
      s.add(w * values[j].real() * gaussian_phi(kappa * h * static_cast<double>(j)));
    }
    return std::abs(2.0 * h * s.value());
  };

  for (std::size_t i = 0; i < lambda_samples; ++i) {
    const double frac = lambda_samples == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(lambda_samples - 1);
    const double log_lambda = frac * log_m;
    TailIntegralSample sample;
    sample.lambda = std::exp(log_lambda);
    sample.value = integrate(log_lambda, base_intervals);
    sample.ratio = sample.value / report.scale;
    report.max_ratio = std::max(report.max_ratio, sample.ratio);
    report.max_ratio_halved = std::max(report.max_ratio_halved, integrate(log_lambda, 2 * base_intervals) / report.scale);
    report.samples.push_back(sample);
  }
  report.stability = relative_change(report.max_ratio, report.max_ratio_halved);
  return report;
}

}  // namespace resonance
