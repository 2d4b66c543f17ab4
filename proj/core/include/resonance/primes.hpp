#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace resonance {

// Largest sieve limit accepted unless the caller passes its own cap.
inline constexpr std::uint64_t kDefaultSieveCap = 1'000'000'000ULL;

/// Immutable list of all primes up to `limit()`, with prime counting by
/// binary search. Safe to share between threads once built.
class PrimeTable {
 public:
  PrimeTable() = default;
  PrimeTable(std::uint64_t limit, std::vector<std::uint64_t> primes);

  std::uint64_t limit() const noexcept { return limit_; }
  std::span<const std::uint64_t> primes() const noexcept { return primes_; }
  std::size_t size() const noexcept { return primes_.size(); }

  /// Number of primes <= x. Throws InsufficientTable when x > limit().
  std::size_t pi(double x) const;

  /// Primes p with p <= x, as a view into the table.
  std::span<const std::uint64_t> primes_up_to(double x) const;

 private:
  std::uint64_t limit_ = 0;
  std::vector<std::uint64_t> primes_;
};

/// Segmented sieve of Eratosthenes. Memory use is one segment plus the
/// output list, so limits around 1e8 are practical.
PrimeTable sieve_primes(std::uint64_t limit, std::uint64_t cap = kDefaultSieveCap);

/// Primes p with lo < p <= hi, increasing. Empty when lo >= hi.
std::vector<std::uint64_t> primes_in_band(const PrimeTable& table, double lo, double hi);

/// prod_{p <= x} (1 - 1/p)^{-1}, accumulated as a sum of logarithms.
double mertens_product(const PrimeTable& table, double x);

}  // namespace resonance
