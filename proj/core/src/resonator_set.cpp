#include "resonance/resonator_set.hpp"

#include <algorithm>
#include <cmath>

#include "resonance/error.hpp"
#include "resonance/summation.hpp"

namespace resonance {

std::string_view to_string(SetKind kind) {
  switch (kind) {
    case SetKind::GalDivisors: return "gal-divisors";
    case SetKind::NearHalf: return "near-half";
    case SetKind::Discretized: return "discretized";
  }
  return "unknown";
}

SetKind set_kind_from_string(std::string_view name) {
  if (name == "gal-divisors" || name == "gal") return SetKind::GalDivisors;
  if (name == "near-half") return SetKind::NearHalf;
  if (name == "discretized") return SetKind::Discretized;
  fail(ErrorKind::Parameter, "unknown set kind '" + std::string(name) + "'");
}

ResonatorSet::ResonatorSet(SetKind kind, ConstructionParams params, std::vector<WeightedElement> elements,
                           std::vector<std::string> notes)
    : kind_(kind), params_(params), elements_(std::move(elements)), notes_(std::move(notes)) {
  std::sort(elements_.begin(), elements_.end(),
            [](const WeightedElement& l, const WeightedElement& r) { return l.value < r.value; });
  index_.reserve(elements_.size());
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    require(elements_[i].weight > 0.0 && std::isfinite(elements_[i].weight), ErrorKind::Parameter,
            "weight of " + elements_[i].value.to_string() + " must be positive and finite");
    const bool fresh = index_.emplace(elements_[i].value, i).second;
    require(fresh, ErrorKind::Parameter, "duplicate element " + elements_[i].value.to_string());
  }
}

std::optional<std::size_t> ResonatorSet::find(const FactoredInt& n) const {
  const auto it = index_.find(n);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

double ResonatorSet::weight_square_sum() const {
  CompensatedSum s;
  for (const auto& e : elements_) s.add(e.weight * e.weight);
  return s.value();
}

double ResonatorSet::weight_sum() const {
  CompensatedSum s;
  for (const auto& e : elements_) s.add(e.weight);
  return s.value();
}

double ResonatorSet::max_log_value() const {
  return elements_.empty() ? 0.0 : elements_.back().value.log_value();
}

bool is_divisor_closed(const ResonatorSet& set) {
  for (const auto& e : set.elements()) {
    const auto f = e.value.factors();
    // Closure under removing one prime power step suffices by induction.
    for (std::size_t i = 0; i < f.size(); ++i) {
      std::vector<PrimePower> parts(f.begin(), f.end());
      if (--parts[i].exponent == 0) parts.erase(parts.begin() + static_cast<std::ptrdiff_t>(i));
      if (!set.contains(FactoredInt(std::move(parts)))) return false;
    }
  }
  return true;
}

}  // namespace resonance
