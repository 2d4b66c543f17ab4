#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <set>
#include <vector>

#include <boost/multiprecision/cpp_dec_float.hpp>

#include "resonance/construct.hpp"
#include "resonance/error.hpp"
#include "resonance/params.hpp"
#include "resonance/primes.hpp"
#include "resonance/quadform.hpp"
#include "resonance/rng.hpp"

using namespace resonance;

namespace {

const PrimeTable& table() {
  static const PrimeTable t = sieve_primes(2'000'000);
  return t;
}

bool prime_by_trial(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> values_of(const ResonatorSet& set) {
  std::vector<std::uint64_t> out;
  for (const auto& e : set.elements()) out.push_back(*e.value.to_u64());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::uint64_t> divisors_by_trial(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 1; d <= n; ++d) {
    if (n % d == 0) out.push_back(d);
  }
  return out;
}

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::ImplementationFault;
}

}  // namespace

TEST_CASE("divisor sets of K(x, ell)") {
  CHECK(values_of(gal_divisor_set(table(), 5, 2, 1000)) == std::vector<std::uint64_t>{1, 2, 3, 5, 6, 10, 15, 30});
  CHECK(values_of(gal_divisor_set(table(), 2, 1, 1000)) == std::vector<std::uint64_t>{1});
  CHECK(values_of(gal_divisor_set(table(), 3, 3, 1000)) == divisors_by_trial(36));
  CHECK(values_of(gal_divisor_set(table(), 7, 3, 1000)) == divisors_by_trial(44100));

  const ResonatorSet s = gal_divisor_set(table(), 13, 3, 1'000'000);
  CHECK(s.size() == 729);
  CHECK(is_divisor_closed(s));
  CHECK(s.weight_square_sum() == 729.0);
  CHECK(kind_of([] { gal_divisor_set(table(), 13, 3, 700); }) == ErrorKind::SizeOverflow);
}

TEST_CASE("divisor-set parameters from T") {
  const GalParams low = gal_params_for(std::exp(std::exp(2.0)));
  CHECK(low.x == doctest::Approx(std::exp(2.0) / 4.0).epsilon(1e-12));
  CHECK(low.ell == 2);

  const double l1 = std::log(1e6);
  const GalParams mid = gal_params_for(1e6);
  CHECK(mid.x == doctest::Approx(l1 / (2.0 * std::log(l1))).epsilon(1e-12));
  CHECK(mid.ell == 2);

  CHECK(gal_params_for(1e100).ell == 5);
  CHECK(kind_of([] { gal_params_for(10.0); }) == ErrorKind::Domain);
}

TEST_CASE("near-half band edges") {
  const std::uint64_t N = 10'000;
  const double L = std::log(1e4) * std::log(std::log(1e4));
  const double lo = std::numbers::e * L;
  const double hi = std::exp(std::pow(0.2, -0.9)) * L;
  std::vector<std::uint64_t> expected;
  for (auto n = static_cast<std::uint64_t>(lo); n <= static_cast<std::uint64_t>(hi); ++n) {
    if (static_cast<double>(n) > lo && prime_by_trial(n)) expected.push_back(n);
  }
  const auto band = near_half_band(table(), N, 0.6, 0.9);
  CHECK(band == expected);
  CHECK(!band.empty());
  CHECK(static_cast<double>(band.front()) > lo);

  // exp((2 sigma - 1)^-alpha) collapses onto e as alpha -> 0.
  CHECK(near_half_band(table(), N, 0.75, 1e-12).empty());
}

TEST_CASE("near-half weight") {
  const std::uint64_t N = 10'000;
  const double sigma = 0.6;
  const double L = std::log(1e4) * std::log(std::log(1e4));
  const double g = std::abs(std::log(2.0 * sigma - 1.0));

  // At p = e L the logarithmic factor equals 1.
  const double edge = std::numbers::e * L;
  const double at_edge = std::pow(L, 1.0 - sigma) / (std::sqrt(g) * std::pow(edge, 1.0 - sigma));
  CHECK(near_half_weight_formula(edge, N, sigma) == doctest::Approx(at_edge).epsilon(1e-12));

  for (const double s : {0.55, 0.6, 0.7}) {
    const double bound = 1.0 / std::sqrt(std::abs(std::log(2.0 * s - 1.0)));
    for (const std::uint64_t p : near_half_band(table(), N, s, 0.9)) CHECK(near_half_weight(p, N, s) < bound);
  }

  using big = boost::multiprecision::cpp_dec_float_50;
  const std::uint64_t p = near_half_band(table(), N, sigma, 0.9).front();
  const big bn(N);
  const big bl1 = log(bn);
  const big bl2 = log(bl1);
  const big bl3 = log(bl2);
  const big bp(p);
  const big one_minus = big(1) - big(6) / 10;
  const big bg = abs(log(big(2) * big(6) / 10 - 1));
  const big expected = pow(bl1 * bl2, one_minus) / (sqrt(bg) * pow(bp, one_minus) * (log(bp) - bl2 - bl3));
  CHECK(near_half_weight(p, N, sigma) == doctest::Approx(expected.convert_to<double>()).epsilon(1e-13));

  CHECK(kind_of([&] { near_half_weight(7, N, sigma); }) == ErrorKind::Domain);
}

TEST_CASE("prime blocks") {
  const std::uint64_t N = 10'000;
  const auto band = near_half_band(table(), N, 0.6, 0.9);
  const auto blocks = prime_blocks(table(), N, 0.6, 0.9);
  REQUIRE(blocks.size() == static_cast<std::size_t>(std::floor(std::pow(0.2, -0.9))));
  std::set<std::uint64_t> seen;
  std::size_t total = 0;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    CHECK(blocks[i].k == static_cast<int>(i) + 1);
    CHECK(static_cast<double>(blocks[i].primes.size()) <= std::exp(blocks[i].k + 1.0) * std::log(1e4));
    for (const auto p : blocks[i].primes) {
      CHECK(std::binary_search(band.begin(), band.end(), p));
      seen.insert(p);
    }
    total += blocks[i].primes.size();
  }
  CHECK(seen.size() == total);
}

TEST_CASE("block thresholds") {
  const double tau1 = block_threshold(10'000, 0.6, 1, 1.05);
  CHECK(tau1 == doctest::Approx(1.05 * std::log(1e4) / std::abs(std::log(0.2))).epsilon(1e-12));
  CHECK(tau1 == doctest::Approx(6.008).epsilon(1e-3));
  CHECK(block_threshold(10'000, 0.6, 2, 1.05) == doctest::Approx(tau1 / 4.0).epsilon(1e-12));
  CHECK(block_threshold(10'000, 0.6, 6, 1.05) == doctest::Approx(block_threshold(10'000, 0.6, 3, 1.05) / 4.0));
  // |log(2 sigma - 1)| falls as sigma grows, so the threshold rises.
  double previous = 0.0;
  for (double s = 0.51; s < 0.75; s += 0.01) {
    const double tau = block_threshold(10'000, s, 1, 1.05);
    CHECK(tau > previous);
    previous = tau;
  }
  CHECK(max_factors_below(3.0) == 2);
  CHECK(max_factors_below(3.2) == 3);
  CHECK(max_factors_below(0.5) == 0);
}

TEST_CASE("support enumeration against exhaustive subsets") {
  const std::vector<std::uint64_t> primes{101, 103, 107, 109, 113, 127, 131, 137, 139, 149};
  SupportSpec spec;
  spec.primes = primes;
  RandomStream rng(3, "synthetic-band");
  for (std::size_t i = 0; i < primes.size(); ++i) {
    spec.weights.push_back(0.2 + 0.7 * rng.uniform());
    spec.block_of.push_back(static_cast<int>(i % 3));
  }
  const int allowance = max_factors_below(3.0);
  spec.max_per_block = {allowance, allowance, allowance};

  std::set<std::uint64_t> expected;
  for (unsigned mask = 0; mask < (1u << primes.size()); ++mask) {
    int counts[3] = {0, 0, 0};
    std::uint64_t n = 1;
    for (std::size_t i = 0; i < primes.size(); ++i) {
      if (mask & (1u << i)) {
        ++counts[i % 3];
        n *= primes[i];
      }
    }
    if (counts[0] <= 2 && counts[1] <= 2 && counts[2] <= 2) expected.insert(n);
  }

  const ResonatorSet all = enumerate_support(spec, 1u << primes.size(), ConstructionParams{});
  const auto got = values_of(all);
  CHECK(std::set<std::uint64_t>(got.begin(), got.end()) == expected);
  CHECK(got.size() == expected.size());
  for (const auto& e : all.elements()) {
    double w = 1.0;
    for (const auto& f : e.value.factors()) {
      const auto i = static_cast<std::size_t>(std::find(primes.begin(), primes.end(), f.prime) - primes.begin());
      w *= spec.weights[i];
    }
    CHECK(e.weight == doctest::Approx(w).epsilon(1e-14));
  }

  // With weights below 1 the heaviest elements form a divisor-closed set.
  const ResonatorSet top = enumerate_support(spec, 60, ConstructionParams{});
  CHECK(top.size() == 60);
  CHECK(is_divisor_closed(top));
  double lightest_kept = INFINITY;
  for (const auto& e : top.elements()) lightest_kept = std::min(lightest_kept, e.weight);
  for (const auto& e : all.elements()) {
    if (!top.contains(e.value)) CHECK(e.weight <= lightest_kept * (1.0 + 1e-12));
  }

  const ResonatorSet empty = enumerate_support(SupportSpec{}, 10, ConstructionParams{});
  REQUIRE(empty.size() == 1);
  CHECK(empty.elements()[0].value.is_one());
  CHECK(empty.elements()[0].weight == 1.0);
}

TEST_CASE("near-half support at N = 1e4") {
  ConstructionParams params = near_half_defaults(1e8, 0.6);
  params.alpha = 0.9;
  params.a = 1.05;
  CHECK_NOTHROW(validate_near_half(params));
  const ResonatorSet set = enumerate_support(table(), params, params.N);
  CHECK(set.size() <= params.N);
  CHECK(is_divisor_closed(set));

  // tau_k falls like 1/k^2; once it drops to 1 or below a single prime of
  // P_k already excludes an integer, so those primes never appear.
  const auto blocks = prime_blocks(table(), params.N, 0.6, 0.9);
  double lightest = INFINITY;
  for (const auto& e : set.elements()) lightest = std::min(lightest, e.weight);
  int open_blocks = 0;
  for (const auto& b : blocks) {
    const bool open = block_threshold(params.N, 0.6, b.k, params.a) > 1.0;
    open_blocks += open;
    for (const auto p : b.primes) {
      const bool heavy = near_half_weight(p, params.N, 0.6) > lightest * (1.0 + 1e-12);
      if (!open) CHECK_FALSE(set.contains(FactoredInt::prime(p)));
      if (open && heavy) CHECK(set.contains(FactoredInt::prime(p)));
    }
  }
  CHECK(open_blocks == 2);
  for (const auto& e : set.elements()) {
    CHECK(e.value.is_square_free());
    for (const auto& b : blocks) {
      int count = 0;
      for (const auto& f : e.value.factors()) count += std::binary_search(b.primes.begin(), b.primes.end(), f.prime);
      CHECK(count < block_threshold(params.N, 0.6, b.k, params.a));
    }
  }
}

TEST_CASE("construction parameters") {
  const ConstructionParams p = near_half_defaults(1e8, 0.6);
  CHECK(p.N == 10'000);
  CHECK(p.alpha == doctest::Approx(0.9));
  CHECK(p.a == doctest::Approx((1.0 + 1.0 / 0.9) / 2.0));
  CHECK(p.a * p.alpha < 1.0);

  ConstructionParams bad = p;
  bad.a = 1.2;
  try {
    validate_near_half(bad);
    FAIL("expected a parameter error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Parameter);
    CHECK(std::string(e.what()).find("a*alpha < 1") != std::string::npos);
  }
  bad = p;
  bad.sigma = 0.8;
  CHECK(kind_of([&] { validate_near_half(bad); }) == ErrorKind::Parameter);
}

TEST_CASE("binomial bounds") {
  const BinomialCheck two = binomial_ratio_bound(8, 3);
  CHECK(two.applies);
  CHECK(two.holds);
  CHECK(two.lhs == doctest::Approx(2.0));
  CHECK_FALSE(binomial_ratio_bound(7, 3).applies);

  const double exact = std::lgamma(101.0) - std::lgamma(11.0) - std::lgamma(91.0);
  const BinomialCheck entropy = binomial_entropy_bound(100, 10);
  CHECK(entropy.holds);
  CHECK(entropy.lhs == doctest::Approx(exact).epsilon(1e-12));
  CHECK(entropy.rhs == doctest::Approx(10.0 * (std::log(100.0) - std::log(10.0)) + 10.0 + std::log(100.0)));
  CHECK(exact <= entropy.rhs);
}

TEST_CASE("cardinality bound") {
  ConstructionParams params = near_half_defaults(1e8, 0.6);
  params.alpha = 0.9;
  params.a = 1.05;
  const CardinalityBound b = cardinality_bound(params);
  CHECK(std::isfinite(b.log_binomial_product));
  CHECK(std::isfinite(b.log_closed_form));
  CHECK(b.log_n == doctest::Approx(std::log(1e4)));
  CHECK(b.log_binomial_product > 0.0);
}

TEST_CASE("additive discretization on synthetic points") {
  const double T = 100.0;
  const double w = std::log(T) * std::log(T) / T;
  CHECK(discretization_width(T) == doctest::Approx(w));

  // Two points in one window of width log(1 + 1/T).
  const std::vector<double> logs{std::log(10.0), std::log(10.0) + 0.5 * std::log1p(1.0 / T)};
  const std::vector<double> weights{0.7, 1.3};
  const auto merged = discretize_points(logs, weights, T);
  REQUIRE(merged.size() == 1);
  CHECK(merged[0].representative == 0);
  CHECK(merged[0].weight == doctest::Approx(std::sqrt(0.7 * 0.7 + 1.3 * 1.3)).epsilon(1e-14));

  // Well separated points come back unchanged.
  std::vector<double> spread;
  std::vector<double> f;
  for (int i = 0; i < 20; ++i) {
    spread.push_back(std::log(2.0) + i * 2.0 * std::log1p(w));
    f.push_back(0.5 + 0.1 * i);
  }
  const auto same = discretize_points(spread, f, T);
  REQUIRE(same.size() == spread.size());
  for (std::size_t i = 0; i < same.size(); ++i) {
    CHECK(same[i].representative == i);
    CHECK(same[i].weight == doctest::Approx(f[i]).epsilon(1e-14));
  }
}

TEST_CASE("additive discretization sandwich on random sets") {
  RandomStream rng(11, "discretize-unit");
  for (const double T : {1e2, 1e3, 1e4}) {
    for (int trial = 0; trial < 5; ++trial) {
      std::set<std::uint64_t> values;
      while (values.size() < 200) values.insert(1 + rng.below(100'000));
      std::vector<WeightedElement> elements;
      for (const auto v : values) elements.push_back({FactoredInt::from_integer(v), 0.1 + 1.9 * rng.uniform()});
      const ResonatorSet in(SetKind::NearHalf, ConstructionParams{}, std::move(elements));
      const ResonatorSet out = additive_discretize(in, T);
      CHECK(out.kind() == SetKind::Discretized);
      CHECK(out.size() <= in.size());
      const double f2 = in.weight_square_sum();
      const double r2 = out.weight_square_sum();
      const double logT = std::log(T);
      CHECK(f2 <= r2 * (1.0 + 1e-12));
      CHECK(r2 <= (2.0 * logT * logT + 2.0) * f2);
      for (const auto& e : out.elements()) CHECK(in.contains(e.value));
    }
  }
}
