#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "resonance/primes.hpp"

namespace resonance::checks {

struct GateResult {
  std::string id;
  std::string group;
  std::string title;
  bool pass = false;
  nlohmann::json measured;
};

/// Shared state for one suite run: the seed and a lazily built prime table.
class Context {
 public:
  explicit Context(std::uint64_t seed) : seed_(seed) {}

  std::uint64_t seed() const noexcept { return seed_; }
  const PrimeTable& table();

 private:
  std::uint64_t seed_;
  PrimeTable table_;
  bool built_ = false;
};

struct GateInfo {
  std::string id;
  std::string group;  // primes, construct, quadform, analytic, bounds
  std::string title;
};

/// Every gate in run order: the acceptance criteria c1..c11 first, then
/// the supporting property checks.
const std::vector<GateInfo>& gate_catalog();

/// True for the gates that make up the acceptance suite.
bool is_acceptance_gate(const std::string& id);

GateResult run_gate(const std::string& id, Context& context);

/// Gates whose id or group appears in `only` (all gates when empty).
std::vector<GateResult> run_suite(std::uint64_t seed, const std::vector<std::string>& only);

nlohmann::json suite_json(std::uint64_t seed, const std::vector<GateResult>& results);

}  // namespace resonance::checks
