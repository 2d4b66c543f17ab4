#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <span>

#include "resonance/factored_int.hpp"
#include "resonance/primes.hpp"
#include "resonance/resonator_set.hpp"

namespace resonance {

struct QuadFormReport {
  double numerator = 0.0;    // sum_{n in S, mk = n, m in S, k <= kLimit} f(n) f(m) / k^sigma
  double denominator = 0.0;  // sum f(n)^2
  double ratio = 0.0;
  std::uint64_t term_count = 0;
  double k_limit = std::numeric_limits<double>::infinity();
};

/// Exact evaluation of the resonance quadratic form. For each n, divisors
/// m are found either by enumerating the divisors of n or by scanning the
/// set, whichever is smaller; nothing is ever factorized.
QuadFormReport resonance_ratio(const ResonatorSet& set, double sigma,
                               double k_limit = std::numeric_limits<double>::infinity());

/// prod_{p <= x} (1 + sum_{v=1}^{ell-1} (1 - v/ell) p^(-v sigma)).
double gal_ratio_product(const PrimeTable& table, double x, std::uint32_t ell, double sigma);

/// prod_{p <= x} (1 + p^-sigma)^(1 - 1/ell).
double gal_bernoulli_lower(const PrimeTable& table, double x, std::uint32_t ell, double sigma);

/// sum_{m, n in set} gcd(m, n)^(2 sigma) / (m n)^sigma.
double gcd_sum(std::span<const FactoredInt> set, double sigma);

/// sum f(m) f(n) gcd(m,n)^(2 sigma)/(mn)^sigma / sum f(n)^2.
double gcd_quadform(const ResonatorSet& set, double sigma);

/// A(N, sigma) = prod_{p in P} (1 + f(p)^2 + f(p) p^-sigma) / (1 + f(p)^2).
double a_product(std::span<const std::uint64_t> band, std::span<const double> weights, double sigma);

/// Main term of the lower bound for A(N, sigma), with the o(1) dropped:
/// exp(alpha g^(3/2)/(1 + g) (log N)^(1-sigma)/(log2 N)^sigma), g = |log(2 sigma - 1)|.
/// An asymptotic target only; nothing is asserted against it at finite N.
double lemma1_lower(std::uint64_t N, double sigma, double alpha);

/// log of the tail threshold M = exp(e (sqrt g + 3) (log N log2 N)^(1 - sigma)).
double rankin_log_threshold(std::uint64_t N, double sigma);
/// log of the critical-line threshold M = exp(e sqrt(log N log2 N log3 N)).
double rankin_log_threshold_critical(std::uint64_t N);

inline constexpr std::size_t kRankinMaxFactors = 40;

struct RankinTail {
  std::optional<double> exact;  // empty when n has more than kRankinMaxFactors primes
  double bound = 0.0;
};

/// exact = sum_{k | n, k >= M} 1/(f(k) k^sigma);
/// bound = M^-delta prod_{p | n} (1 + 1/(p^(sigma - delta) f(p))).
/// `weight` gives f(p) for each prime of n. M is passed as log M.
RankinTail rankin_tail(const FactoredInt& n, const std::function<double(std::uint64_t)>& weight, double sigma,
                       double log_threshold, double delta);

}  // namespace resonance
