#include <algorithm>
#include <cmath>
#include <numbers>

#include "resonance/construct.hpp"
#include "resonance/error.hpp"

namespace resonance {

ResonatorSet gal_divisor_set(const PrimeTable& table, double x, std::uint32_t ell, std::uint64_t cap) {
  require(x >= 2.0, ErrorKind::Parameter, "gal_divisor_set needs x >= 2");
  require(ell >= 1, ErrorKind::Parameter, "gal_divisor_set needs ell >= 1");
  const auto primes = table.primes_up_to(x);
  const double log_size = static_cast<double>(primes.size()) * std::log(static_cast<double>(ell));
  require(log_size <= std::log(static_cast<double>(cap)) + 1e-9, ErrorKind::SizeOverflow,
          "ell^pi(x) = " + std::to_string(ell) + "^" + std::to_string(primes.size()) + " exceeds cap " +
              std::to_string(cap));

  std::vector<WeightedElement> elements;
  elements.reserve(static_cast<std::size_t>(std::llround(std::exp(log_size))));
  std::vector<std::uint32_t> exps(primes.size(), 0);
  while (true) {
    std::vector<PrimePower> parts;
    for (std::size_t i = 0; i < primes.size(); ++i) {
      if (exps[i] > 0) parts.push_back({primes[i], exps[i]});
    }
    elements.push_back({FactoredInt(std::move(parts)), 1.0});
    std::size_t i = 0;
    while (i < primes.size() && exps[i] + 1 == ell) {
      exps[i] = 0;
      ++i;
    }
    if (i == primes.size() || ell == 1) break;
    ++exps[i];
  }

  ConstructionParams params;
  params.x = x;
  params.ell = ell;
  params.N = cap;
  return ResonatorSet(SetKind::GalDivisors, params, std::move(elements));
}

GalParams gal_params_for(double T) {
  require(T > std::exp(std::numbers::e), ErrorKind::Domain, "gal_params_for needs T > e^e so that log log T > 1");
  const double log_t = std::log(T);
  const double log2_t = std::log(log_t);
  return {log_t / (2.0 * log2_t), static_cast<std::uint32_t>(std::floor(log2_t))};
}

namespace {

double log_choose(double m, double n) {
  return std::lgamma(m + 1.0) - std::lgamma(n + 1.0) - std::lgamma(m - n + 1.0);
}

}  // namespace

BinomialCheck binomial_entropy_bound(std::uint64_t m, std::uint64_t n) {
  BinomialCheck out;
  out.applies = n >= 1 && n <= m;
  if (!out.applies) return out;
  const double md = static_cast<double>(m);
  const double nd = static_cast<double>(n);
  out.lhs = log_choose(md, nd);
  out.rhs = nd * (std::log(md) - std::log(nd)) + nd + std::log(md);
  out.holds = out.lhs <= out.rhs;
  return out;
}

BinomialCheck binomial_ratio_bound(std::uint64_t m, std::uint64_t n) {
  BinomialCheck out;
  out.applies = n >= 1 && m + 1 >= 3 * n;
  if (n == 0) return out;
  out.lhs = (static_cast<double>(m) - static_cast<double>(n) + 1.0) / static_cast<double>(n);
  out.rhs = 2.0;
  out.holds = out.lhs >= out.rhs;
  return out;
}

CardinalityBound cardinality_bound(const ConstructionParams& params) {
  const NearHalfScales s = near_half_scales(params.N, params.sigma, params.alpha);
  CardinalityBound out;
  out.log_n = s.log_n;
  const int blocks = s.block_count();
  for (int k = 1; k <= blocks; ++k) {
    const double kd = k;
    const double tau = block_threshold(params.N, params.sigma, k, params.a);
    const double m = std::floor(std::exp(kd + 1.0) * s.log_n);
    const double top = std::min(std::floor(tau), m);
    // log sum_{j=0}^{top} C(m, j) by log-sum-exp.
    double peak = -INFINITY;
    std::vector<double> terms;
    for (double j = 0; j <= top; j += 1.0) {
      terms.push_back(log_choose(m, j));
      peak = std::max(peak, terms.back());
    }
    double acc = 0.0;
    for (const double t : terms) acc += std::exp(t - peak);
    out.log_binomial_product += peak + std::log(acc);

    out.log_closed_form += 1.0 +
                           params.a * s.log_n * (kd + 2.0 + std::log(s.gap_log) + 2.0 * std::log(kd)) /
                               (kd * kd * s.gap_log) +
                           kd + 1.0 + s.log2_n;
  }
  out.within_n = out.log_binomial_product <= out.log_n;
  return out;
}

}  // namespace resonance
