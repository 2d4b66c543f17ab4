#include "resonance/factored_int.hpp"

#include <algorithm>
#include <cmath>

#include "resonance/error.hpp"

namespace resonance {

FactoredInt::FactoredInt(std::vector<PrimePower> factors) : factors_(std::move(factors)) {
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    require(factors_[i].prime >= 2 && factors_[i].exponent >= 1, ErrorKind::Parameter,
            "factor list entries need prime >= 2 and exponent >= 1");
    require(i == 0 || factors_[i - 1].prime < factors_[i].prime, ErrorKind::Parameter,
            "factor list must be strictly increasing in the prime");
  }
  recompute_log();
}

FactoredInt FactoredInt::prime(std::uint64_t p) { return FactoredInt({{p, 1}}); }

FactoredInt FactoredInt::from_integer(std::uint64_t n) {
  require(n >= 1, ErrorKind::Parameter, "from_integer requires n >= 1");
  std::vector<PrimePower> parts;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    std::uint32_t e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    parts.push_back({p, e});
  }
  if (n > 1) parts.push_back({n, 1});
  return FactoredInt(std::move(parts));
}

FactoredInt FactoredInt::square_free(std::span<const std::uint64_t> increasing_primes) {
  std::vector<PrimePower> parts;
  parts.reserve(increasing_primes.size());
  for (const auto p : increasing_primes) parts.push_back({p, 1});
  return FactoredInt(std::move(parts));
}

void FactoredInt::recompute_log() {
  double s = 0.0;
  for (const auto& f : factors_) s += f.exponent * std::log(static_cast<double>(f.prime));
  log_value_ = s;
}

std::uint64_t FactoredInt::big_omega() const noexcept {
  std::uint64_t s = 0;
  for (const auto& f : factors_) s += f.exponent;
  return s;
}

bool FactoredInt::is_square_free() const noexcept {
  return std::all_of(factors_.begin(), factors_.end(), [](const PrimePower& f) { return f.exponent == 1; });
}

std::uint32_t FactoredInt::exponent_of(std::uint64_t p) const noexcept {
  const auto it = std::lower_bound(factors_.begin(), factors_.end(), p,
                                   [](const PrimePower& f, std::uint64_t q) { return f.prime < q; });
  return (it != factors_.end() && it->prime == p) ? it->exponent : 0;
}

bool FactoredInt::divides(const FactoredInt& other) const noexcept {
  std::size_t j = 0;
  for (const auto& f : factors_) {
    while (j < other.factors_.size() && other.factors_[j].prime < f.prime) ++j;
    if (j == other.factors_.size() || other.factors_[j].prime != f.prime) return false;
    if (other.factors_[j].exponent < f.exponent) return false;
  }
  return true;
}

FactoredInt FactoredInt::quotient(const FactoredInt& divisor) const {
  require(divisor.divides(*this), ErrorKind::Domain, divisor.to_string() + " does not divide " + to_string());
  std::vector<PrimePower> parts;
  std::size_t j = 0;
  for (const auto& f : factors_) {
    std::uint32_t e = f.exponent;
    if (j < divisor.factors_.size() && divisor.factors_[j].prime == f.prime) {
      e -= divisor.factors_[j].exponent;
      ++j;
    }
    if (e > 0) parts.push_back({f.prime, e});
  }
  return FactoredInt(std::move(parts));
}

std::uint64_t FactoredInt::divisor_count(std::uint64_t cap) const noexcept {
  std::uint64_t count = 1;
  for (const auto& f : factors_) {
    const std::uint64_t m = f.exponent + 1ULL;
    if (count > cap / m) return cap;
    count *= m;
  }
  return std::min(count, cap);
}

std::optional<std::uint64_t> FactoredInt::to_u64() const noexcept {
  std::uint64_t v = 1;
  for (const auto& f : factors_) {
    for (std::uint32_t e = 0; e < f.exponent; ++e) {
      if (v > UINT64_MAX / f.prime) return std::nullopt;
      v *= f.prime;
    }
  }
  return v;
}

std::string FactoredInt::to_string() const {
  if (factors_.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) s += '*';
    s += std::to_string(factors_[i].prime);
    if (factors_[i].exponent > 1) s += '^' + std::to_string(factors_[i].exponent);
  }
  return s;
}

FactoredInt operator*(const FactoredInt& a, const FactoredInt& b) {
  std::vector<PrimePower> parts;
  parts.reserve(a.factors_.size() + b.factors_.size());
  std::size_t i = 0, j = 0;
  while (i < a.factors_.size() || j < b.factors_.size()) {
    if (j == b.factors_.size() || (i < a.factors_.size() && a.factors_[i].prime < b.factors_[j].prime)) {
      parts.push_back(a.factors_[i++]);
    } else if (i == a.factors_.size() || b.factors_[j].prime < a.factors_[i].prime) {
      parts.push_back(b.factors_[j++]);
    } else {
      parts.push_back({a.factors_[i].prime, a.factors_[i].exponent + b.factors_[j].exponent});
      ++i;
      ++j;
    }
  }
  return FactoredInt(std::move(parts));
}

FactoredInt gcd(const FactoredInt& a, const FactoredInt& b) {
  std::vector<PrimePower> parts;
  std::size_t i = 0, j = 0;
  while (i < a.factors_.size() && j < b.factors_.size()) {
    if (a.factors_[i].prime < b.factors_[j].prime) {
      ++i;
    } else if (b.factors_[j].prime < a.factors_[i].prime) {
      ++j;
    } else {
      parts.push_back({a.factors_[i].prime, std::min(a.factors_[i].exponent, b.factors_[j].exponent)});
      ++i;
      ++j;
    }
  }
  return FactoredInt(std::move(parts));
}

std::strong_ordering operator<=>(const FactoredInt& a, const FactoredInt& b) noexcept {
  if (a.factors_ == b.factors_) return std::strong_ordering::equal;
  if (a.log_value_ < b.log_value_) return std::strong_ordering::less;
  if (b.log_value_ < a.log_value_) return std::strong_ordering::greater;
  return std::lexicographical_compare_three_way(a.factors_.begin(), a.factors_.end(), b.factors_.begin(),
                                                b.factors_.end());
}

std::size_t FactoredIntHash::operator()(const FactoredInt& n) const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (const auto& f : n.factors()) {
    h ^= std::hash<std::uint64_t>{}(f.prime) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h ^= std::hash<std::uint32_t>{}(f.exponent) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace resonance
