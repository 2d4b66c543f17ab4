#include "resonance/scan.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "resonance/dirichlet.hpp"
#include "resonance/error.hpp"
#include "resonance/rng.hpp"
#include "resonance/zeta.hpp"

namespace resonance {

namespace {

using cd = std::complex<double>;

constexpr std::size_t kRefineTargets = 5;
constexpr std::uint64_t kMaxGoldenSteps = 80;

struct Point {
  double t;
  double value;
};

// Indices of local maxima of v (plateaus count once), best first.
std::vector<std::size_t> local_maxima(const std::vector<double>& v) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const bool left = i == 0 || v[i] > v[i - 1];
    const bool right = i + 1 == v.size() || v[i] >= v[i + 1];
    if (left && right) out.push_back(i);
  }
  std::stable_sort(out.begin(), out.end(), [&](std::size_t a, std::size_t b) { return v[a] > v[b]; });
  return out;
}

}  // namespace

ScanEvaluator ScanEvaluator::zeta(double sigma, double x) {
  require(sigma >= 0.1, ErrorKind::Domain, "zeta scan needs sigma >= 0.1");
  require(x >= 2.0, ErrorKind::Domain, "zeta scan needs x >= 2");
  ScanEvaluator e;
  e.zeta_ = true;
  e.sigma_ = sigma;
  e.x_ = x;
  return e;
}

ScanEvaluator ScanEvaluator::partial_sum(std::uint64_t M) {
  require(M >= 1, ErrorKind::Parameter, "partial-sum scan needs M >= 1");
  ScanEvaluator e;
  e.zeta_ = false;
  e.sigma_ = 0.5;
  e.M_ = M;
  return e;
}

std::string ScanEvaluator::describe() const {
  return zeta_ ? "zeta(sigma=" + std::to_string(sigma_) + ", x=" + std::to_string(x_) + ")"
               : "partialSum(M=" + std::to_string(M_) + ")";
}

double ScanEvaluator::operator()(double t) const {
  return zeta_ ? std::abs(zeta_approx(sigma_, t, x_)) : std::abs(resonance::partial_sum(M_, t));
}

void ScanEvaluator::evaluate_grid(double t0, double h, std::vector<double>& out) const {
  std::vector<cd> values(out.size());
  if (zeta_) {
    ZetaApproxEvaluator(sigma_, x_).evaluate_grid(t0, h, values);
  } else {
    DirichletSeries::integers(0.5, M_).evaluate_grid(t0, h, values);
  }
  for (std::size_t j = 0; j < out.size(); ++j) out[j] = std::abs(values[j]);
}

double ScanEvaluator::local_scale() const noexcept {
  const double top = zeta_ ? std::log(x_) : std::log(static_cast<double>(M_));
  return std::numbers::pi / std::max(top, 1.0);
}

ScanResult scan_max(const ScanEvaluator& evaluator, double lo, double hi, const ScanOptions& options) {
  require(options.budget >= 3, ErrorKind::Parameter, "scan budget must be >= 3");
  require(lo < hi, ErrorKind::Parameter, "scan interval must have lo < hi");
  if (evaluator.is_zeta()) {
    require(std::max(std::abs(lo), std::abs(hi)) <= evaluator.x(), ErrorKind::Domain,
            "zeta scan interval must lie within |t| <= x");
  }

  ScanResult result;
  result.sigma = evaluator.sigma();
  result.lo = lo;
  result.hi = hi;
  result.budget = options.budget;
  result.evaluator = evaluator.describe();
  result.strategy = options.guide ? "guided-grid+golden" : "grid+golden";

  std::uint64_t used = 0;
  std::vector<Point> points;

  const std::uint64_t grid_count = std::max<std::uint64_t>(1, options.budget / 2);
  const double spacing = (hi - lo) / static_cast<double>(grid_count);
  RandomStream offset_rng(options.seed, "scan-offset");
  const double offset = offset_rng.uniform();
  std::vector<double> grid(grid_count);
  evaluator.evaluate_grid(lo + offset * spacing, spacing, grid);
  used += grid_count;
  for (std::uint64_t j = 0; j < grid_count; ++j) points.push_back({lo + (static_cast<double>(j) + offset) * spacing, grid[j]});

  if (options.guide != nullptr && options.guide->size() > 0) {
    const DirichletSeries r = resonator_series(*options.guide);
    const double omega = std::max(r.max_abs_frequency(), 1.0);
    const double h = 2.0 * std::numbers::pi / (8.0 * omega);
    const auto count = static_cast<std::size_t>(std::floor((hi - lo) / h)) + 1;
    std::vector<cd> rv(count);
    r.evaluate_grid(lo, h, rv);
    std::vector<double> mod(count);
    for (std::size_t j = 0; j < count; ++j) mod[j] = std::abs(rv[j]);
    const auto maxima = local_maxima(mod);
    const std::uint64_t take = std::min<std::uint64_t>(options.budget / 4, maxima.size());
    for (std::uint64_t i = 0; i < take && used < options.budget; ++i) {
      const double t = lo + static_cast<double>(maxima[i]) * h;
      points.push_back({t, evaluator(t)});
      ++used;
    }
  }

  for (const double t : options.extra_candidates) {
    if (t < lo || t > hi || used >= options.budget) continue;
    points.push_back({t, evaluator(t)});
    ++used;
  }

  std::vector<Point> ranked = points;
  std::stable_sort(ranked.begin(), ranked.end(), [](const Point& a, const Point& b) { return a.value > b.value; });
  const std::size_t targets = std::min(kRefineTargets, ranked.size());
  const std::uint64_t remaining = options.budget > used ? options.budget - used : 0;
  const std::uint64_t per_target = targets == 0 ? 0 : remaining / targets;

  Point best = ranked.front();
  const double radius = std::min(spacing, evaluator.local_scale());
  constexpr double kInvPhi = 0.6180339887498949;
  for (std::size_t i = 0; i < targets; ++i) {
    if (per_target < 2) break;
    double a = std::max(lo, ranked[i].t - radius);
    double b = std::min(hi, ranked[i].t + radius);
    double c = b - kInvPhi * (b - a);
    double d = a + kInvPhi * (b - a);
    double fc = evaluator(c);
    double fd = evaluator(d);
    used += 2;
    if (fc > best.value) best = {c, fc};
    if (fd > best.value) best = {d, fd};
    const std::uint64_t steps = std::min(per_target - 2, kMaxGoldenSteps);
    for (std::uint64_t s = 0; s < steps; ++s) {
      if (fc >= fd) {
        b = d;
        d = c;
        fd = fc;
        c = b - kInvPhi * (b - a);
        fc = evaluator(c);
        if (fc > best.value) best = {c, fc};
      } else {
        a = c;
        c = d;
        fc = fd;
        d = a + kInvPhi * (b - a);
        fd = evaluator(d);
        if (fd > best.value) best = {d, fd};
      }
      ++used;
    }
  }

  result.t_star = best.t;
  result.value = evaluator(best.t);
  result.evaluations = used;
  return result;
}

}  // namespace resonance
