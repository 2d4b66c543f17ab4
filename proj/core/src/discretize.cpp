#include <algorithm>
#include <cmath>
#include <numeric>

#include "resonance/construct.hpp"
#include "resonance/error.hpp"
#include "resonance/summation.hpp"

namespace resonance {

namespace {
// Relative slack toward inclusion at the closed window ends.
constexpr double kEdgeSlack = 1e-14;
}  // namespace

double discretization_width(double T) {
  require(T >= 2.0, ErrorKind::Parameter, "discretization needs T >= 2");
  const double log_t = std::log(T);
  const double width = log_t * log_t / T;
  require(width < 1.0, ErrorKind::Domain,
          "window half-width (log T)^2/T = " + std::to_string(width) + " reaches 1; the window would touch 0");
  return width;
}

std::vector<DiscretePoint> discretize_points(std::span<const double> log_values, std::span<const double> weights,
                                             double T) {
  require(log_values.size() == weights.size(), ErrorKind::Parameter, "log values and weights must align");
  const double width = discretization_width(T);
  const double step = std::log1p(1.0 / T);

  std::vector<std::size_t> order(log_values.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t l, std::size_t r) { return log_values[l] < log_values[r]; });
  std::vector<double> sorted_logs(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    require(weights[order[i]] > 0.0, ErrorKind::Parameter, "discretization weights must be positive");
    sorted_logs[i] = log_values[order[i]];
  }

  const double lo_log = std::log1p(-width);
  const double hi_log = std::log1p(width);

  std::vector<DiscretePoint> out;
  long long current_window = 0;
  bool have_window = false;
  for (std::size_t i = 0; i < order.size(); ++i) {
    const auto window = static_cast<long long>(std::floor(sorted_logs[i] / step));
    if (have_window && window == current_window) continue;
    have_window = true;
    current_window = window;

    const double center = sorted_logs[i];
    const double slack = 4.0 * kEdgeSlack + 1e-15 * std::abs(center);
    const auto first = std::lower_bound(sorted_logs.begin(), sorted_logs.end(), center + lo_log - slack);
    const auto last = std::upper_bound(sorted_logs.begin(), sorted_logs.end(), center + hi_log + slack);
    CompensatedSum mass;
    for (auto it = first; it != last; ++it) {
      const std::size_t j = static_cast<std::size_t>(it - sorted_logs.begin());
      const double ratio_minus_one = std::expm1(sorted_logs[j] - center);
      if (ratio_minus_one >= -width * (1.0 + kEdgeSlack) && ratio_minus_one <= width * (1.0 + kEdgeSlack)) {
        const double w = weights[order[j]];
        mass.add(w * w);
      }
    }
    out.push_back({order[i], std::sqrt(mass.value())});
  }
  return out;
}

ResonatorSet additive_discretize(const ResonatorSet& set, double T) {
  std::vector<double> logs;
  std::vector<double> weights;
  logs.reserve(set.size());
  weights.reserve(set.size());
  for (const auto& e : set.elements()) {
    logs.push_back(e.value.log_value());
    weights.push_back(e.weight);
  }
  const auto points = discretize_points(logs, weights, T);
  std::vector<WeightedElement> elements;
  elements.reserve(points.size());
  for (const auto& p : points) elements.push_back({set.elements()[p.representative].value, p.weight});
  ConstructionParams params = set.params();
  params.T = T;
  std::vector<std::string> notes = set.notes();
  notes.push_back("discretized from " + std::string(to_string(set.kind())) + " set of " +
                  std::to_string(set.size()) + " elements");
  return ResonatorSet(SetKind::Discretized, params, std::move(elements), std::move(notes));
}

}  // namespace resonance
