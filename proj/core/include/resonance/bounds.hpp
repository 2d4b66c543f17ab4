#pragma once

#include <cstdint>

#include "resonance/primes.hpp"

namespace resonance {

inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;

/// Lower envelope and asymptotic main term of nu(sigma) on (1/2, 1).
///
/// floor = 1/(2 - 2 sigma). asym takes the sigma -> 1/2 term
/// sqrt(|log(2 sigma - 1)|/2) below 0.6, the sigma -> 1 term 1/(1 - sigma)
/// above 0.9, interpolates linearly in between and never drops below floor.
struct NuProfile {
  double floor = 0.0;
  double asym = 0.0;
};

NuProfile nu_profile(double sigma);

/// Constants the asymptotic statements leave unspecified. All default to 0.
struct BoundConstants {
  double c_intermediate = 0.0;  // additive constant in the exponent for sigma >= 3/4
  double c_half = 0.49;         // W(T, 1/2) constant, must lie in (0, 1/2)
};

/// log of the predicted maximum of |zeta(sigma + it)|:
/// sigma = 1/2: sqrt(log T log3 T / log2 T / 2);
/// 1/2 < sigma < 3/4: nu(sigma) (log T)^(1-sigma) / (log2 T)^sigma;
/// 3/4 <= sigma < 1: log log2 T + c + the same;
/// sigma = 1: log(e^gamma log2 T).
double predicted_log_max(double sigma, double T, const BoundConstants& constants = {});
double predicted_max(double sigma, double T, const BoundConstants& constants = {});

/// e^gamma log log T.
double levinson(double T);

struct PsumEstimate {
  double lhs = 0.0;         // sum_{p <= x} p^-sigma
  double main_terms = 0.0;  // sigma log log x + x^(1-sigma) / ((1-sigma) log x)
  double gap = 0.0;         // lhs - main_terms
};

/// Requires (1 - sigma) log x >= 1/2 and x within the table.
PsumEstimate psum_estimate(const PrimeTable& table, double sigma, double x);

/// x^(1-sigma) / ((1-sigma) log x).
double psum_objective(double sigma, double x);

/// (1 + delta) log3 T (log T)^(1-sigma) / ((1-sigma) (log2 T)^(sigma+1)), the
/// bound on E(T, sigma) with its additive constant set to 0.
double e_error_term(double sigma, double T, double delta);

/// W(T, sigma): exp(c sqrt(log T log3 T / log2 T)) at sigma = 1/2 with
/// 0 < c < 1/2, exp(nu(sigma) (log T)^(1-sigma) / (log2 T)^sigma) on (1/2, 1).
double w_target(double sigma, double T, double c);

struct CombinedParams {
  double x = 0.0;
  std::uint32_t ell = 0;
  double objective = 0.0;          // psum_objective(sigma, x)
  double log_cardinality = 0.0;    // pi(x) log ell, at most log(T)/2
  bool objective_increasing = false;  // (1 - sigma) log x >= 1, where the objective grows with x
};

/// ell = round(1/(1 - sigma)) and x the largest prime with ell^pi(x) <= sqrt(T).
CombinedParams combined_params(double sigma, double T);

/// exp(e sqrt(log T log2 T log3 T / 2)), returned as its logarithm.
double partial_sum_log_threshold(double T);
double partial_sum_threshold(double T);

/// Conjectured size of the maximum: exp(sqrt(log T log2 T / 2)) up to
/// sigma = 1/2 + 1/log2 T, exp((log T)^(1-sigma) / (log2 T)^sigma / sqrt 2) beyond.
double fgh_prediction(double sigma, double T);

struct BoundProfile {
  double sigma = 0.0;
  double T = 0.0;
  double nu_floor = 0.0;
  double nu_asym = 0.0;
  double predicted_log_max = 0.0;
  double levinson = 0.0;
  double W = 0.0;
  double fgh_prediction = 0.0;
  double euler_gamma = kEulerGamma;
};

/// All of the above at one point, for 1/2 < sigma < 1 and T >= 16.
BoundProfile bound_profile(double sigma, double T, const BoundConstants& constants = {});

}  // namespace resonance
