#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "resonance/primes.hpp"
#include "resonance/resonator_set.hpp"

namespace resonance {

// ---------------------------------------------------------------------------
// Divisor sets of K(x, ell) = prod_{p <= x} p^(ell - 1)
// ---------------------------------------------------------------------------

/// All divisors of K(x, ell) with unit weight. The predicted cardinality
/// ell^pi(x) is checked against `cap` in log space before enumerating.
ResonatorSet gal_divisor_set(const PrimeTable& table, double x, std::uint32_t ell, std::uint64_t cap);

struct GalParams {
  double x = 0.0;
  std::uint32_t ell = 0;
};

/// x = log T / (2 log log T), ell = floor(log log T). Requires T > e^e.
GalParams gal_params_for(double T);

// ---------------------------------------------------------------------------
// Near-critical construction
// ---------------------------------------------------------------------------

/// Scales shared by the band, the weight and the block thresholds.
///
/// For 1/2 < sigma <= 3/4, `gap_log` is |log(2 sigma - 1)| and
/// `band_exponent` is (2 sigma - 1)^(-alpha). On the critical line the
/// substitution 2 sigma - 1 -> 1/log log N is used instead, which gives
/// gap_log = log log log N and band_exponent = (log log N)^alpha.
struct NearHalfScales {
  double sigma = 0.0;
  double log_n = 0.0;
  double log2_n = 0.0;
  double log3_n = 0.0;
  double gap_log = 0.0;
  double band_exponent = 0.0;
  bool critical_line = false;

  double band_base() const noexcept { return log_n * log2_n; }
  double lower_edge() const noexcept;
  double upper_edge() const noexcept;
  int block_count() const noexcept;
};

NearHalfScales near_half_scales(std::uint64_t N, double sigma, double alpha);

/// Primes in (e log N log2 N, log N exp((2 sigma - 1)^-alpha) log2 N].
std::vector<std::uint64_t> near_half_band(const PrimeTable& table, std::uint64_t N, double sigma, double alpha);

/// The weight formula evaluated at a real abscissa p, without the band
/// check. Requires log p - log2 N - log3 N > 0.
double near_half_weight_formula(double p, std::uint64_t N, double sigma);

/// f(p) for a prime strictly above the band's lower edge.
double near_half_weight(std::uint64_t p, std::uint64_t N, double sigma);

struct PrimeBlock {
  int k = 0;
  std::vector<std::uint64_t> primes;
};

/// Blocks P_k = band primes in (e^k L, e^(k+1) L], k = 1..floor(band_exponent),
/// with L = log N log2 N. The last block is clipped at the band edge.
std::vector<PrimeBlock> prime_blocks(const PrimeTable& table, std::uint64_t N, double sigma, double alpha);

/// tau_k = a log N / (k^2 gap_log). An element is pruned once it has
/// ceil(tau_k) or more prime factors in P_k.
double block_threshold(std::uint64_t N, double sigma, int k, double a);

/// Largest admissible number of prime factors from one block for threshold tau.
int max_factors_below(double tau) noexcept;

/// Explicit description of a square-free support: primes, their weights,
/// the block each prime belongs to and the per-block factor allowance.
struct SupportSpec {
  std::vector<std::uint64_t> primes;  // increasing
  std::vector<double> weights;        // f(p), aligned with primes
  std::vector<int> block_of;          // index into max_per_block
  std::vector<int> max_per_block;     // allowed count of factors per block
};

/// Best-first enumeration of the square-free products allowed by `spec`,
/// keeping the `budget` heaviest. The result is divisor closed.
ResonatorSet enumerate_support(const SupportSpec& spec, std::size_t budget, const ConstructionParams& params);

/// Builds the band, weights and block thresholds from `params` and enumerates.
/// Budget is additionally capped by params.N.
ResonatorSet enumerate_support(const PrimeTable& table, const ConstructionParams& params, std::size_t budget);

SupportSpec near_half_support_spec(const PrimeTable& table, const ConstructionParams& params);

// ---------------------------------------------------------------------------
// Cardinality bounds
// ---------------------------------------------------------------------------

struct BinomialCheck {
  double lhs = 0.0;  // log-scale left side (bin1) or the ratio (bin2)
  double rhs = 0.0;
  bool applies = false;
  bool holds = false;
};

/// log C(m, n) <= n (log m - log n) + n + log m, for n <= m.
BinomialCheck binomial_entropy_bound(std::uint64_t m, std::uint64_t n);
/// C(m, n) / C(m, n - 1) = (m - n + 1)/n >= 2, applicable when m >= 3n - 1.
BinomialCheck binomial_ratio_bound(std::uint64_t m, std::uint64_t n);

struct CardinalityBound {
  double log_binomial_product = 0.0;  // log prod_k sum_{j <= [tau_k]} C([e^(k+1) log N], j)
  double log_closed_form = 0.0;       // the final exponential bound
  double log_n = 0.0;
  bool within_n = false;              // log_binomial_product <= log N
};

CardinalityBound cardinality_bound(const ConstructionParams& params);

// ---------------------------------------------------------------------------
// Additive control
// ---------------------------------------------------------------------------

struct DiscretePoint {
  std::size_t representative = 0;  // index of m_j in the input
  double weight = 0.0;             // r(m_j)
};

/// Window half-width T^-1 (log T)^2; throws Domain when it reaches 1.
double discretization_width(double T);

/// Discretization on bare (log value, weight) pairs, which lets tests use
/// non-integer points. Representatives are returned in increasing order.
std::vector<DiscretePoint> discretize_points(std::span<const double> log_values, std::span<const double> weights,
                                             double T);

/// Keeps the least element of each window [(1 + 1/T)^j, (1 + 1/T)^(j+1)) and
/// gives it the local l2 mass over n/m in [1 - w, 1 + w], w = (log T)^2 / T.
ResonatorSet additive_discretize(const ResonatorSet& set, double T);

}  // namespace resonance
