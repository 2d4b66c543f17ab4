#include "resonance/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "resonance/error.hpp"
#include "resonance/summation.hpp"

namespace resonance {

namespace {

constexpr double kBlendLo = 0.6;
constexpr double kBlendHi = 0.9;

struct Logs {
  double l1, l2, l3;
};

Logs iterated_logs(double T) {
  require(T >= 16.0, ErrorKind::Domain, "need T >= 16 so that log log log T is defined");
  const double l1 = std::log(T);
  const double l2 = std::log(l1);
  return {l1, l2, std::log(l2)};
}

void check_open_strip(double sigma) {
  require(sigma > 0.5 && sigma < 1.0, ErrorKind::Domain,
          "sigma must lie in (1/2, 1), got " + std::to_string(sigma));
}

double strip_exponent(double sigma, const Logs& lg) {
  return nu_profile(sigma).asym * std::pow(lg.l1, 1.0 - sigma) / std::pow(lg.l2, sigma);
}

}  // namespace

NuProfile nu_profile(double sigma) {
  check_open_strip(sigma);
  NuProfile out;
  out.floor = 1.0 / (2.0 - 2.0 * sigma);
  const double near_half = std::sqrt(std::abs(std::log(2.0 * sigma - 1.0)) / 2.0);
  const double near_one = 1.0 / (1.0 - sigma);
  double blended = near_half;
  if (sigma >= kBlendHi) {
    blended = near_one;
  } else if (sigma > kBlendLo) {
    const double lambda = (sigma - kBlendLo) / (kBlendHi - kBlendLo);
    blended = (1.0 - lambda) * near_half + lambda * near_one;
  }
  out.asym = std::max(out.floor, blended);
  return out;
}

double predicted_log_max(double sigma, double T, const BoundConstants& constants) {
  require(sigma >= 0.5 && sigma <= 1.0, ErrorKind::Domain, "predicted_max needs sigma in [1/2, 1]");
  const Logs lg = iterated_logs(T);
  if (sigma == 0.5) return std::sqrt(lg.l1 * lg.l3 / lg.l2) / std::numbers::sqrt2;
  if (sigma == 1.0) return std::log(levinson(T));
  double e = strip_exponent(sigma, lg);
  if (sigma >= 0.75) e += std::log(lg.l2) + constants.c_intermediate;
  return e;
}

double predicted_max(double sigma, double T, const BoundConstants& constants) {
  return std::exp(predicted_log_max(sigma, T, constants));
}

double levinson(double T) {
  require(T > std::numbers::e, ErrorKind::Domain, "levinson needs T > e");
  return std::exp(kEulerGamma) * std::log(std::log(T));
}

double psum_objective(double sigma, double x) {
  return std::exp((1.0 - sigma) * std::log(x)) / ((1.0 - sigma) * std::log(x));
}

PsumEstimate psum_estimate(const PrimeTable& table, double sigma, double x) {
  require(sigma > 0.0 && sigma < 1.0, ErrorKind::Domain, "psum_estimate needs sigma in (0, 1)");
  require(x > std::numbers::e, ErrorKind::Domain, "psum_estimate needs x > e");
  const double guard = (1.0 - sigma) * std::log(x);
  require(guard >= 0.5, ErrorKind::Domain,
          "psum_estimate needs (1 - sigma) log x >= 1/2, got " + std::to_string(guard));
  CompensatedSum lhs;
  for (const std::uint64_t p : table.primes_up_to(x)) lhs.add(std::exp(-sigma * std::log(static_cast<double>(p))));
  PsumEstimate out;
  out.lhs = lhs.value();
  out.main_terms = sigma * std::log(std::log(x)) + psum_objective(sigma, x);
  out.gap = out.lhs - out.main_terms;
  return out;
}

double e_error_term(double sigma, double T, double delta) {
  check_open_strip(sigma);
  require(delta > 0.0, ErrorKind::Domain, "e_error_term needs delta > 0");
  const Logs lg = iterated_logs(T);
  return (1.0 + delta) * lg.l3 * std::pow(lg.l1, 1.0 - sigma) / ((1.0 - sigma) * std::pow(lg.l2, sigma + 1.0));
}

double w_target(double sigma, double T, double c) {
  const Logs lg = iterated_logs(T);
  if (sigma == 0.5) {
    require(c > 0.0 && c < 0.5, ErrorKind::Domain, "W(T, 1/2) needs 0 < c < 1/2, got " + std::to_string(c));
    return std::exp(c * std::sqrt(lg.l1 * lg.l3 / lg.l2));
  }
  check_open_strip(sigma);
  return std::exp(strip_exponent(sigma, lg));
}

CombinedParams combined_params(double sigma, double T) {
  check_open_strip(sigma);
  const Logs lg = iterated_logs(T);
  CombinedParams out;
  out.ell = static_cast<std::uint32_t>(std::lround(1.0 / (1.0 - sigma)));
  const double log_ell = std::log(static_cast<double>(out.ell));
  const auto max_count = static_cast<std::size_t>(std::floor(0.5 * lg.l1 / log_ell + 1e-12));
  require(max_count >= 1, ErrorKind::Parameter,
          "no admissible x >= 2: ell = " + std::to_string(out.ell) + " already exceeds sqrt(T)");
  // The max_count-th prime is below 2 max_count log max_count + 10 for every count.
  const double n = static_cast<double>(max_count);
  const auto limit = static_cast<std::uint64_t>(2.0 * n * std::log(n + 1.0) + 16.0);
  const PrimeTable table = sieve_primes(limit);
  require(table.size() >= max_count, ErrorKind::ImplementationFault, "prime table too short in combined_params");
  out.x = static_cast<double>(table.primes()[max_count - 1]);
  out.log_cardinality = static_cast<double>(max_count) * log_ell;
  out.objective = psum_objective(sigma, out.x);
  out.objective_increasing = (1.0 - sigma) * std::log(out.x) >= 1.0;
  return out;
}

double partial_sum_log_threshold(double T) {
  const Logs lg = iterated_logs(T);
  return std::numbers::e * std::sqrt(lg.l1 * lg.l2 * lg.l3 / 2.0);
}

double partial_sum_threshold(double T) { return std::exp(partial_sum_log_threshold(T)); }

double fgh_prediction(double sigma, double T) {
  require(sigma >= 0.5 && sigma < 1.0, ErrorKind::Domain, "fgh_prediction needs sigma in [1/2, 1)");
  const Logs lg = iterated_logs(T);
  if (sigma <= 0.5 + 1.0 / lg.l2) return std::exp(std::sqrt(lg.l1 * lg.l2) / std::numbers::sqrt2);
  return std::exp(std::pow(lg.l1, 1.0 - sigma) / std::pow(lg.l2, sigma) / std::numbers::sqrt2);
}

BoundProfile bound_profile(double sigma, double T, const BoundConstants& constants) {
  check_open_strip(sigma);
  BoundProfile out;
  out.sigma = sigma;
  out.T = T;
  const NuProfile nu = nu_profile(sigma);
  out.nu_floor = nu.floor;
  out.nu_asym = nu.asym;
  out.predicted_log_max = predicted_log_max(sigma, T, constants);
  out.levinson = levinson(T);
  out.W = w_target(sigma, T, constants.c_half);
  out.fgh_prediction = fgh_prediction(sigma, T);
  return out;
}

}  // namespace resonance
