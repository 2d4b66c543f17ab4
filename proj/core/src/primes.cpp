#include "resonance/primes.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "resonance/error.hpp"
#include "resonance/summation.hpp"

namespace resonance {

namespace {

constexpr std::uint64_t kSegmentSize = 1u << 18;

std::vector<std::uint64_t> small_sieve(std::uint64_t limit) {
  std::vector<bool> composite(limit + 1, false);
  std::vector<std::uint64_t> out;
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return out;
}

std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

}  // namespace

PrimeTable::PrimeTable(std::uint64_t limit, std::vector<std::uint64_t> primes)
    : limit_(limit), primes_(std::move(primes)) {}

std::size_t PrimeTable::pi(double x) const {
  return primes_up_to(x).size();
}

std::span<const std::uint64_t> PrimeTable::primes_up_to(double x) const {
  if (x < 2.0) return {};
  require(x < static_cast<double>(limit_) + 1.0, ErrorKind::InsufficientTable,
          "argument " + std::to_string(x) + " exceeds sieve limit " + std::to_string(limit_));
  const auto bound = static_cast<std::uint64_t>(std::floor(x));
  const auto end = std::upper_bound(primes_.begin(), primes_.end(), bound);
  return {primes_.data(), static_cast<std::size_t>(end - primes_.begin())};
}

PrimeTable sieve_primes(std::uint64_t limit, std::uint64_t cap) {
  require(limit >= 1, ErrorKind::Parameter, "sieve limit must be >= 1");
  require(limit <= cap, ErrorKind::Resource,
          "sieve limit " + std::to_string(limit) + " exceeds cap " + std::to_string(cap));
  if (limit < 2) return PrimeTable(limit, {});

  const std::uint64_t root = isqrt(limit);
  const std::vector<std::uint64_t> base = small_sieve(root);

  std::vector<std::uint64_t> primes;
  if (limit > 100) {
    const double estimate = 1.1 * static_cast<double>(limit) / std::log(static_cast<double>(limit));
    primes.reserve(static_cast<std::size_t>(estimate));
  }

  std::vector<char> segment(kSegmentSize);
  for (std::uint64_t low = 2; low <= limit; low += kSegmentSize) {
    const std::uint64_t high = std::min(low + kSegmentSize - 1, limit);
    std::fill(segment.begin(), segment.end(), 1);
    for (const std::uint64_t p : base) {
      if (p * p > high) break;
      std::uint64_t start = std::max(p * p, (low + p - 1) / p * p);
      for (std::uint64_t j = start; j <= high; j += p) segment[j - low] = 0;
    }
    for (std::uint64_t n = low; n <= high; ++n) {
      if (segment[n - low]) primes.push_back(n);
    }
  }
  return PrimeTable(limit, std::move(primes));
}

std::vector<std::uint64_t> primes_in_band(const PrimeTable& table, double lo, double hi) {
  if (!(lo < hi)) return {};
  require(hi < static_cast<double>(table.limit()) + 1.0, ErrorKind::InsufficientTable,
          "band edge " + std::to_string(hi) + " exceeds sieve limit " + std::to_string(table.limit()));
  const auto all = table.primes();
  auto first = std::upper_bound(all.begin(), all.end(), lo,
                                [](double v, std::uint64_t p) { return v < static_cast<double>(p); });
  auto last = std::upper_bound(all.begin(), all.end(), hi,
                               [](double v, std::uint64_t p) { return v < static_cast<double>(p); });
  if (last <= first) return {};
  return {first, last};
}

double mertens_product(const PrimeTable& table, double x) {
  require(x >= 2.0, ErrorKind::Domain, "mertens_product requires x >= 2");
  CompensatedSum log_sum;
  for (const std::uint64_t p : table.primes_up_to(x)) {
    log_sum.add(-std::log1p(-1.0 / static_cast<double>(p)));
  }
  return std::exp(log_sum.value());
}

}  // namespace resonance
