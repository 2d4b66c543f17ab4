#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "resonance/factored_int.hpp"
#include "resonance/params.hpp"

namespace resonance {

enum class SetKind { GalDivisors, NearHalf, Discretized };

std::string_view to_string(SetKind kind);
SetKind set_kind_from_string(std::string_view name);

struct WeightedElement {
  FactoredInt value;
  double weight = 0.0;
};

/// A finite weighted set {(n, f(n))}. Elements are kept sorted by value and
/// are unique; weights are strictly positive.
class ResonatorSet {
 public:
  ResonatorSet(SetKind kind, ConstructionParams params, std::vector<WeightedElement> elements,
               std::vector<std::string> notes = {});

  SetKind kind() const noexcept { return kind_; }
  const ConstructionParams& params() const noexcept { return params_; }
  std::span<const WeightedElement> elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  const std::vector<std::string>& notes() const noexcept { return notes_; }

  std::optional<std::size_t> find(const FactoredInt& n) const;
  bool contains(const FactoredInt& n) const { return find(n).has_value(); }

  double weight_square_sum() const;
  double weight_sum() const;
  double max_log_value() const;

 private:
  SetKind kind_;
  ConstructionParams params_;
  std::vector<WeightedElement> elements_;
  std::vector<std::string> notes_;
  std::unordered_map<FactoredInt, std::size_t, FactoredIntHash> index_;
};

/// True when every divisor of every element is itself an element.
bool is_divisor_closed(const ResonatorSet& set);

}  // namespace resonance
