#include "resonance/params.hpp"

#include <algorithm>
#include <cmath>

#include "resonance/error.hpp"

namespace resonance {

ConstructionParams near_half_defaults(double T, double sigma) {
  require(T >= 256.0, ErrorKind::Parameter, "near-half construction needs T >= 256 so that N >= 16");
  ConstructionParams p;
  p.T = T;
  p.sigma = sigma;
  p.N = static_cast<std::uint64_t>(std::floor(std::sqrt(T)));
  p.alpha = std::min(0.95, 1.0 - (sigma - 0.5));
  p.a = 0.5 * (1.0 + 1.0 / p.alpha);
  p.b = 1.2;
  p.delta = 1.0 / std::log(std::log(static_cast<double>(p.N)));
  p.beta = 0.5;
  return p;
}

std::vector<std::string> validate_near_half(const ConstructionParams& p) {
  require(p.sigma >= 0.5 && p.sigma <= 0.75, ErrorKind::Parameter,
          "near-half construction needs 1/2 <= sigma <= 3/4, got " + std::to_string(p.sigma));
  require(p.alpha > 0.0 && p.alpha < 1.0, ErrorKind::Parameter, "alpha must lie in (0, 1)");
  require(p.a > 1.0, ErrorKind::Parameter, "a must exceed 1");
  require(p.a * p.alpha < 1.0, ErrorKind::Parameter,
          "constraint a*alpha < 1 violated (a*alpha = " + std::to_string(p.a * p.alpha) + ")");
  require(p.b > 1.0, ErrorKind::Parameter, "b must exceed 1");
  require(p.beta == 0.5, ErrorKind::Parameter, "beta is fixed at 1/2");
  require(p.N >= 16, ErrorKind::Parameter, "N must be at least 16 so that log log log N > 0");

  std::vector<std::string> notes;
  if (p.sigma > 0.5 && p.T > std::exp(1.0)) {
    const double floor_sigma = 0.5 + 1.0 / std::log(std::log(p.T));
    if (p.sigma < floor_sigma) {
      notes.push_back("sigma = " + std::to_string(p.sigma) + " lies below 1/2 + 1/log log T = " +
                      std::to_string(floor_sigma) + "; construction used as given");
    }
  }
  return notes;
}

}  // namespace resonance
