#include "resonance/checks/oracles.hpp"

#include <cmath>

#include "resonance/summation.hpp"

namespace resonance::checks {

bool is_prime_trial(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> primes_by_trial(std::uint64_t lo, std::uint64_t hi) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = lo; n <= hi; ++n) {
    if (is_prime_trial(n)) out.push_back(n);
  }
  return out;
}

double brute_ratio(std::span<const std::uint64_t> values, std::span<const double> weights, double sigma,
                   double k_limit) {
  CompensatedSum num;
  CompensatedSum den;
  for (std::size_t i = 0; i < values.size(); ++i) {
    den.add(weights[i] * weights[i]);
    for (std::size_t j = 0; j < values.size(); ++j) {
      if (values[i] % values[j] != 0) continue;
      const double k = static_cast<double>(values[i] / values[j]);
      if (k > k_limit) continue;
      num.add(weights[i] * weights[j] * std::pow(k, -sigma));
    }
  }
  return num.value() / den.value();
}

double a_product_direct(std::span<const std::uint64_t> band, std::span<const double> weights, double sigma) {
  const std::size_t count = band.size();
  const std::uint64_t subsets = 1ULL << count;
  std::vector<double> log_n(subsets, 0.0);
  std::vector<double> f(subsets, 1.0);
  for (std::uint64_t mask = 1; mask < subsets; ++mask) {
    const int low = __builtin_ctzll(mask);
    const std::uint64_t rest = mask & (mask - 1);
    log_n[mask] = log_n[rest] + std::log(static_cast<double>(band[low]));
    f[mask] = f[rest] * weights[low];
  }
  CompensatedSum den;
  CompensatedSum num;
  for (std::uint64_t n = 0; n < subsets; ++n) {
    den.add(f[n] * f[n]);
    CompensatedSum inner;
    // Every submask d of n.
    for (std::uint64_t d = n;; d = (d - 1) & n) {
      inner.add(f[d] * std::exp(sigma * log_n[d]));
      if (d == 0) break;
    }
    num.add(f[n] * std::exp(-sigma * log_n[n]) * inner.value());
  }
  return num.value() / den.value();
}

}  // namespace resonance::checks
