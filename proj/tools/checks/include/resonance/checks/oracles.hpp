#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace resonance::checks {

bool is_prime_trial(std::uint64_t n);

/// Primes in [lo, hi] by trial division.
std::vector<std::uint64_t> primes_by_trial(std::uint64_t lo, std::uint64_t hi);

/// sum_{n in S, m in S, m | n, n/m <= k_limit} f(n) f(m) (n/m)^-sigma / sum f^2 on
/// plain integers, testing divisibility with %.
double brute_ratio(std::span<const std::uint64_t> values, std::span<const double> weights, double sigma,
                   double k_limit);

/// (1/sum_j f(j)^2) sum_n f(n) n^-sigma sum_{d | n} f(d) d^sigma over every
/// square-free n built from `band`, with f multiplicative.
double a_product_direct(std::span<const std::uint64_t> band, std::span<const double> weights, double sigma);

}  // namespace resonance::checks
