#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace resonance {

struct PrimePower {
  std::uint64_t prime = 0;
  std::uint32_t exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
  friend auto operator<=>(const PrimePower&, const PrimePower&) = default;
};

/// A positive integer stored by its factorization. Resonator elements are
/// products of dozens of primes, so magnitude is only ever handled through
/// log_value() and divisibility through the exponent vector.
///
/// Ordering is by log_value with the factor list as tie-break; equality is
/// equality of factorizations.
class FactoredInt {
 public:
  FactoredInt() = default;  // the integer 1
  explicit FactoredInt(std::vector<PrimePower> factors);

  static FactoredInt prime(std::uint64_t p);
  /// Factorizes by trial division; intended for small test values.
  static FactoredInt from_integer(std::uint64_t n);
  /// Square-free product of the given increasing primes.
  static FactoredInt square_free(std::span<const std::uint64_t> increasing_primes);

  std::span<const PrimePower> factors() const noexcept { return factors_; }
  double log_value() const noexcept { return log_value_; }
  std::size_t omega() const noexcept { return factors_.size(); }
  std::uint64_t big_omega() const noexcept;
  bool is_one() const noexcept { return factors_.empty(); }
  bool is_square_free() const noexcept;
  std::uint32_t exponent_of(std::uint64_t p) const noexcept;

  bool divides(const FactoredInt& other) const noexcept;
  /// this / divisor; throws Domain when divisor does not divide this.
  FactoredInt quotient(const FactoredInt& divisor) const;

  /// Number of divisors, saturating at `cap`.
  std::uint64_t divisor_count(std::uint64_t cap = UINT64_MAX) const noexcept;

  std::optional<std::uint64_t> to_u64() const noexcept;
  std::string to_string() const;

  friend FactoredInt operator*(const FactoredInt& a, const FactoredInt& b);
  friend FactoredInt gcd(const FactoredInt& a, const FactoredInt& b);

  friend bool operator==(const FactoredInt& a, const FactoredInt& b) noexcept {
    return a.factors_ == b.factors_;
  }
  friend std::strong_ordering operator<=>(const FactoredInt& a, const FactoredInt& b) noexcept;

 private:
  void recompute_log();

  std::vector<PrimePower> factors_;
  double log_value_ = 0.0;
};

struct FactoredIntHash {
  std::size_t operator()(const FactoredInt& n) const noexcept;
};

/// Calls fn(divisor) for every divisor of n, iterating exponent vectors in
/// mixed-radix order starting from 1.
template <typename Fn>
void for_each_divisor(const FactoredInt& n, Fn&& fn) {
  const auto f = n.factors();
  std::vector<std::uint32_t> exps(f.size(), 0);
  while (true) {
    std::vector<PrimePower> parts;
    parts.reserve(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (exps[i] > 0) parts.push_back({f[i].prime, exps[i]});
    }
    fn(FactoredInt(std::move(parts)));
    std::size_t i = 0;
    while (i < f.size() && exps[i] == f[i].exponent) {
      exps[i] = 0;
      ++i;
    }
    if (i == f.size()) break;
    ++exps[i];
  }
}

}  // namespace resonance
