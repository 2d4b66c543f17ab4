#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace resonance {

/// Every scalar the resonator constructions consume.
///
/// `T` is the right end of the interval under study, `N` caps the size of
/// the multiplicative set (normally floor(sqrt(T))). `x` and `ell` drive the
/// divisor-set construction; `alpha`, `a`, `b`, `delta` drive the
/// near-critical construction. `beta` is the fixed lower interval exponent.
struct ConstructionParams {
  double T = 0.0;
  double sigma = 0.5;
  std::uint64_t N = 1;
  double x = 2.0;
  std::uint32_t ell = 1;
  double alpha = 0.9;
  double a = 1.05;
  double b = 1.2;
  double delta = 0.0;
  double beta = 0.5;

  friend bool operator==(const ConstructionParams&, const ConstructionParams&) = default;
};

/// Defaults for the near-critical construction at (T, sigma):
/// N = floor(sqrt(T)), alpha = min(0.95, 1 - (sigma - 1/2)),
/// a = (1 + 1/alpha)/2, b = 1.2, delta = 1/log log N.
ConstructionParams near_half_defaults(double T, double sigma);

/// Throws Parameter unless the near-critical constraints hold
/// (0 < alpha < 1, 1 < a < 1/alpha, b > 1, beta = 1/2, N >= 16,
/// 1/2 <= sigma <= 3/4). Returns advisory notes, e.g. when sigma lies
/// below 1/2 + 1/log log T.
std::vector<std::string> validate_near_half(const ConstructionParams& params);

}  // namespace resonance
