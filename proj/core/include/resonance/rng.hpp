#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace resonance {

/// Named random stream derived from a run seed. Two streams with the same
/// (seed, name) produce the same sequence; different names are independent.
class RandomStream {
 public:
  RandomStream(std::uint64_t seed, std::string_view name);

  std::uint64_t next() { return engine_(); }
  /// Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  /// Uniform on {0, ..., n - 1}, n >= 1.
  std::uint64_t below(std::uint64_t n);

 private:
  std::mt19937_64 engine_;
};

}  // namespace resonance
