#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <vector>

#include "resonance/bounds.hpp"
#include "resonance/error.hpp"
#include "resonance/primes.hpp"
#include "resonance/rng.hpp"

using namespace resonance;

namespace {

// Plain sieve over a byte array, kept deliberately naive.
std::vector<std::uint64_t> plain_sieve(std::uint64_t limit) {
  std::vector<char> composite(limit + 1, 0);
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = 2; n <= limit; ++n) {
    if (composite[n]) continue;
    out.push_back(n);
    for (std::uint64_t m = n * n; m <= limit; m += n) composite[m] = 1;
  }
  return out;
}

bool prime_by_trial(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("sieve on tiny limits") {
  const PrimeTable one = sieve_primes(1);
  CHECK(one.size() == 0);
  CHECK(one.pi(1) == 0);

  const PrimeTable ten = sieve_primes(10);
  CHECK(std::vector<std::uint64_t>(ten.primes().begin(), ten.primes().end()) ==
        std::vector<std::uint64_t>{2, 3, 5, 7});
  CHECK(ten.pi(10) == 4);
  CHECK(ten.pi(6.5) == 3);
}

TEST_CASE("sieve to 1e6 agrees with a second sieve and with trial division") {
  const PrimeTable table = sieve_primes(1'000'000);
  const auto reference = plain_sieve(1'000'000);
  CHECK(table.size() == reference.size());
  CHECK(std::vector<std::uint64_t>(table.primes().begin(), table.primes().end()) == reference);
  CHECK(table.pi(1e6) == 78498);

  RandomStream rng(7, "sieve-sample");
  std::size_t sampled = 0;
  for (const std::uint64_t p : table.primes()) {
    if (rng.uniform() < 0.01) {
      CHECK(prime_by_trial(p));
      ++sampled;
    }
  }
  CHECK(sampled > 500);
  // Composites near the top are missed by the sieve, checked by trial division.
  for (std::uint64_t n = 999'000; n <= 1'000'000; ++n) {
    CHECK(prime_by_trial(n) == (table.pi(static_cast<double>(n)) > table.pi(static_cast<double>(n - 1))));
  }
}

TEST_CASE("segment boundaries do not drop primes") {
  const std::uint64_t limit = 3'000'017;
  const PrimeTable table = sieve_primes(limit);
  CHECK(std::vector<std::uint64_t>(table.primes().begin(), table.primes().end()) == plain_sieve(limit));
}

TEST_CASE("sieve errors") {
  CHECK_THROWS_AS(sieve_primes(0), Error);
  try {
    sieve_primes(1000, 100);
    FAIL("expected a resource error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Resource);
  }
  const PrimeTable table = sieve_primes(100);
  try {
    (void)table.pi(101);
    FAIL("expected InsufficientTable");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InsufficientTable);
  }
}

TEST_CASE("primes_in_band is open below and closed above") {
  const PrimeTable table = sieve_primes(1000);
  CHECK(primes_in_band(table, 2, 2).empty());
  CHECK(primes_in_band(table, 2, 7) == std::vector<std::uint64_t>{3, 5, 7});
  CHECK(primes_in_band(table, 10, 5).empty());

  std::vector<std::uint64_t> expected;
  for (std::uint64_t n = 101; n <= 150; ++n) {
    if (prime_by_trial(n)) expected.push_back(n);
  }
  CHECK(primes_in_band(table, 100, 150) == expected);
  CHECK(expected == std::vector<std::uint64_t>{101, 103, 107, 109, 113, 127, 131, 137, 139, 149});
}

TEST_CASE("mertens product") {
  const PrimeTable table = sieve_primes(1'000'000);
  CHECK(mertens_product(table, 2) == doctest::Approx(2.0).epsilon(1e-15));
  // (2/1)(3/2)(5/4)(7/6) = 35/8
  CHECK(mertens_product(table, 10) == doctest::Approx(35.0 / 8.0).epsilon(1e-14));

  const auto ratio = [&](double x) { return mertens_product(table, x) / (std::exp(kEulerGamma) * std::log(x)); };
  CHECK(std::abs(ratio(1e5) - 1.0) <= 0.01);
  double previous = std::abs(ratio(1e3) - 1.0);
  for (const double x : {1e4, 1e5, 1e6}) {
    const double deviation = std::abs(ratio(x) - 1.0);
    CHECK(deviation < previous);
    previous = deviation;
  }
  CHECK_THROWS_AS(mertens_product(table, 1.5), Error);
}
