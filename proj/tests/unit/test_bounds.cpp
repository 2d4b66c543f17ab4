#include <doctest.h>

#include <cmath>
#include <numbers>

#include <boost/math/special_functions/expint.hpp>
#include <boost/multiprecision/cpp_dec_float.hpp>

#include "resonance/bounds.hpp"
#include "resonance/error.hpp"
#include "resonance/primes.hpp"

using namespace resonance;

namespace {

const PrimeTable& table() {
  static const PrimeTable t = sieve_primes(1'000'000);
  return t;
}

bool prime_by_trial(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
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

TEST_CASE("Euler constant against 50 digits") {
  using big = boost::multiprecision::cpp_dec_float_50;
  const big gamma("0.57721566490153286060651209008240243104215933593992");
  CHECK(kEulerGamma == doctest::Approx(gamma.convert_to<double>()).epsilon(1e-16));
}

TEST_CASE("nu profile") {
  CHECK(nu_profile(0.75).floor == 2.0);
  CHECK(nu_profile(0.51).asym == doctest::Approx(std::sqrt(std::abs(std::log(0.02)) / 2.0)).epsilon(1e-12));
  CHECK(nu_profile(0.51).asym == doctest::Approx(1.399).epsilon(1e-3));
  CHECK(nu_profile(0.99).asym * 0.01 == doctest::Approx(1.0).epsilon(1e-12));
  for (double s = 0.51; s < 0.995; s += 0.01) {
    const NuProfile nu = nu_profile(s);
    CHECK(nu.asym >= nu.floor);
    CHECK(nu.floor == doctest::Approx(1.0 / (2.0 - 2.0 * s)));
  }
  CHECK_THROWS_AS(nu_profile(0.5), Error);
  CHECK_THROWS_AS(nu_profile(1.0), Error);
}

TEST_CASE("predicted maxima") {
  CHECK(levinson(1e6) == doctest::Approx(std::exp(kEulerGamma) * std::log(std::log(1e6))).epsilon(1e-14));
  CHECK(predicted_max(1.0, 1e6) == doctest::Approx(4.677).epsilon(1e-3));

  const double l1 = std::log(1e6);
  const double l2 = std::log(l1);
  const double l3 = std::log(l2);
  CHECK(predicted_log_max(0.5, 1e6) == doctest::Approx(std::sqrt(l1 * l3 / l2) / std::sqrt(2.0)).epsilon(1e-14));
  CHECK(predicted_log_max(0.5, 1e6) == doctest::Approx(1.594).epsilon(1e-3));

  double previous = 0.0;
  for (double T = 100.0; T < 1e12; T *= 1.7) {
    const double v = predicted_log_max(0.5, T);
    CHECK(v > previous);
    previous = v;
  }

  const double t = 1e8;
  const double m1 = std::log(t);
  const double m2 = std::log(m1);
  CHECK(predicted_log_max(0.6, t) ==
        doctest::Approx(nu_profile(0.6).asym * std::pow(m1, 0.4) / std::pow(m2, 0.6)).epsilon(1e-14));
  BoundConstants c;
  c.c_intermediate = 0.3;
  CHECK(predicted_log_max(0.8, t, c) ==
        doctest::Approx(std::log(m2) + 0.3 + nu_profile(0.8).asym * std::pow(m1, 0.2) / std::pow(m2, 0.8)));
}

TEST_CASE("prime sums") {
  double lhs = 0.0;
  int count = 0;
  for (std::uint64_t n = 2; n <= 100; ++n) {
    if (prime_by_trial(n)) {
      lhs += std::pow(static_cast<double>(n), -0.75);
      ++count;
    }
  }
  CHECK(count == 25);
  const PsumEstimate e = psum_estimate(table(), 0.75, 100.0);
  CHECK(e.lhs == doctest::Approx(lhs).epsilon(1e-14));
  const double main_terms = 0.75 * std::log(std::log(100.0)) + std::pow(100.0, 0.25) / (0.25 * std::log(100.0));
  CHECK(e.main_terms == doctest::Approx(main_terms).epsilon(1e-14));
  CHECK(e.gap == doctest::Approx(lhs - main_terms));
  CHECK(psum_objective(0.75, 100.0) == doctest::Approx(std::pow(100.0, 0.25) / (0.25 * std::log(100.0))));

  // gap/main decays like 1/((1 - sigma) log x), so it only turns down late:
  // past 1e5 at sigma = 0.6, from 1e3 on at sigma = 0.9.
  const auto share = [](double sigma, double x) {
    const PsumEstimate p = psum_estimate(table(), sigma, x);
    return std::abs(p.gap) / p.main_terms;
  };
  CHECK(share(0.6, 1e6) < share(0.6, 1e5));
  double previous = INFINITY;
  for (const double x : {1e3, 1e4, 1e5, 1e6}) {
    CHECK(share(0.9, x) < previous);
    previous = share(0.9, x);
  }

  // The prime sum tracks li(x^(1 - sigma)) up to a constant.
  for (const double sigma : {0.6, 0.75, 0.9}) {
    const auto offset = [&](double x) {
      return psum_estimate(table(), sigma, x).lhs - boost::math::expint((1.0 - sigma) * std::log(x));
    };
    CHECK(std::abs(offset(1e6) - offset(1e5)) < 0.05);
  }
  CHECK(kind_of([] { psum_estimate(table(), 0.9, 100.0); }) == ErrorKind::Domain);
}

TEST_CASE("error term and W") {
  // The (log T)^(1 - sigma) / (log2 T)^(sigma + 1) factor falls with sigma;
  // the 1/(1 - sigma) factor does not, so E itself turns up near 1.
  double previous = INFINITY;
  for (double s = 0.55; s < 0.99; s += 0.05) {
    const double scaled = e_error_term(s, 1e6, 0.1) * (1.0 - s);
    CHECK(scaled < previous);
    previous = scaled;
  }
  CHECK(e_error_term(0.95, 1e6, 0.1) > e_error_term(0.75, 1e6, 0.1));
  const double l1 = std::log(1e6);
  const double l2 = std::log(l1);
  const double l3 = std::log(l2);
  CHECK(e_error_term(0.75, 1e6, 0.1) ==
        doctest::Approx(1.1 * l3 * std::pow(l1, 0.25) / (0.25 * std::pow(l2, 1.75))).epsilon(1e-14));
  for (const double T : {1e4, 1e5, 1e6, 1e8}) {
    const double L1 = std::log(T);
    const double L2 = std::log(L1);
    const double nu_term = nu_profile(0.75).asym * std::pow(L1, 0.25) / std::pow(L2, 0.75);
    CHECK(e_error_term(0.75, T, 0.1) / nu_term < 1.0);
  }

  CHECK(w_target(0.5, 1e6, 0.49) == doctest::Approx(std::exp(0.49 * std::sqrt(l1 * l3 / l2))).epsilon(1e-14));
  CHECK(w_target(0.5, 1e6, 0.49) == doctest::Approx(3.02).epsilon(1e-2));
  CHECK(kind_of([] { w_target(0.5, 1e6, 0.5); }) == ErrorKind::Domain);
  CHECK(kind_of([] { w_target(0.5, 1e6, 0.0); }) == ErrorKind::Domain);
  const double edge = 0.5 + 1.0 / l2;
  CHECK(std::isfinite(w_target(edge - 1e-9, 1e6, 0.49)));
  CHECK(std::isfinite(w_target(edge + 1e-9, 1e6, 0.49)));
}

TEST_CASE("combined parameter rule") {
  CHECK(combined_params(0.75, 1e8).ell == 4);
  for (const double sigma : {0.6, 0.7, 0.75, 0.8, 0.9}) {
    for (const double T : {1e6, 1e8, 1e12}) {
      const CombinedParams cp = combined_params(sigma, T);
      CHECK(cp.ell == static_cast<std::uint32_t>(std::lround(1.0 / (1.0 - sigma))));
      const double pi_x = static_cast<double>(table().pi(cp.x));
      CHECK(pi_x * std::log(cp.ell) <= 0.5 * std::log(T) + 1e-12);
      CHECK((pi_x + 1.0) * std::log(cp.ell) > 0.5 * std::log(T));
      CHECK(prime_by_trial(static_cast<std::uint64_t>(cp.x)));
      CHECK(cp.objective == doctest::Approx(psum_objective(sigma, cp.x)));
    }
  }
  // At (0.8, 1e8) the admissible edge lies where the objective still falls.
  const CombinedParams cp = combined_params(0.8, 1e8);
  CHECK(cp.ell == 5);
  CHECK(cp.x == 11.0);
  CHECK_FALSE(cp.objective_increasing);
}

TEST_CASE("partial sum threshold and conjectural size") {
  const double l1 = std::log(1e6);
  const double l2 = std::log(l1);
  const double l3 = std::log(l2);
  CHECK(partial_sum_log_threshold(1e6) == doctest::Approx(std::numbers::e * std::sqrt(l1 * l2 * l3 / 2.0)));
  CHECK(partial_sum_log_threshold(1e6) == doctest::Approx(11.38).epsilon(1e-3));
  double previous = 0.0;
  for (double T = 1e3; T < 1e15; T *= 3.0) {
    const double v = partial_sum_log_threshold(T);
    CHECK(v > previous);
    previous = v;
  }
  for (double T = 1e4; T < 1e12; T *= 10.0) CHECK(predicted_max(0.5, T) < std::sqrt(partial_sum_threshold(T)));

  CHECK(fgh_prediction(0.5, 1e6) == doctest::Approx(std::exp(std::sqrt(l1 * l2 / 2.0))));
  CHECK(fgh_prediction(0.99, 1e6) ==
        doctest::Approx(std::exp(std::pow(l1, 0.01) / std::pow(l2, 0.99) / std::sqrt(2.0))));

  const BoundProfile p = bound_profile(0.7, 1e8);
  CHECK(p.predicted_log_max == doctest::Approx(predicted_log_max(0.7, 1e8)));
  CHECK(p.levinson == doctest::Approx(levinson(1e8)));
  CHECK(p.nu_floor == doctest::Approx(nu_profile(0.7).floor));
  CHECK(kind_of([] { bound_profile(0.5, 1e8); }) == ErrorKind::Domain);
}
