#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "resonance/certify.hpp"
#include "resonance/construct.hpp"
#include "resonance/dirichlet.hpp"
#include "resonance/error.hpp"
#include "resonance/mollifier.hpp"
#include "resonance/moments.hpp"
#include "resonance/primes.hpp"
#include "resonance/scan.hpp"
#include "resonance/zeta.hpp"

using namespace resonance;
using cd = std::complex<double>;

namespace {

const PrimeTable& table() {
  static const PrimeTable t = sieve_primes(1000);
  return t;
}

ResonatorSet singleton(std::uint64_t n, double w) {
  return ResonatorSet(SetKind::NearHalf, ConstructionParams{}, {{FactoredInt::from_integer(n), w}});
}

// Euler-Maclaurin summation with cutoff N >= |t| and ten Bernoulli terms.
cd zeta_euler_maclaurin(double sigma, double t) {
  const cd s(sigma, t);
  const int N = static_cast<int>(std::abs(t)) + 30;
  cd sum = 0.0;
  for (int n = 1; n < N; ++n) sum += std::pow(static_cast<double>(n), -s);
  const double Nd = N;
  sum += std::pow(Nd, 1.0 - s) / (s - 1.0) + 0.5 * std::pow(Nd, -s);
  static const double bernoulli[] = {1.0 / 6,      -1.0 / 30,     1.0 / 42,         -1.0 / 30,         5.0 / 66,
                                     -691.0 / 2730, 7.0 / 6,       -3617.0 / 510,    43867.0 / 798,     -174611.0 / 330};
  cd rising = s;  // s (s+1) ... (s+2k-2)
  double factorial = 2.0;
  for (int k = 1; k <= 10; ++k) {
    sum += bernoulli[k - 1] / factorial * rising * std::pow(Nd, -s - 2.0 * k + 1.0);
    rising *= (s + 2.0 * k - 1.0) * (s + 2.0 * k);
    factorial *= (2.0 * k + 1.0) * (2.0 * k + 2.0);
  }
  return sum;
}

double simpson(auto&& f, double a, double b, int intervals) {
  const double h = (b - a) / intervals;
  double s = f(a) + f(b);
  for (int i = 1; i < intervals; ++i) s += f(a + i * h) * (i % 2 == 1 ? 4.0 : 2.0);
  return s * h / 3.0;
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

TEST_CASE("zeta_approx") {
  const double zeta2 = std::numbers::pi * std::numbers::pi / 6.0;
  CHECK(std::abs(zeta_approx(2.0, 0.0, 1e4) - zeta2) < 1e-7);
  CHECK(std::abs(zeta_approx(0.5, 14.134725, 1e4)) < 1e-2);
  CHECK(std::abs(zeta_approx(0.5, 0.0, 1e4) - (-1.4603545)) < 1e-2);

  CHECK(kind_of([] { zeta_approx(0.05, 1.0, 100.0); }) == ErrorKind::Domain);
  CHECK(kind_of([] { zeta_approx(0.5, 200.0, 100.0); }) == ErrorKind::Domain);
  CHECK(kind_of([] { zeta_approx(0.5, 1.0, 1.5); }) == ErrorKind::Domain);
  CHECK(kind_of([] { zeta_approx(1.0, 1e-8, 100.0); }) == ErrorKind::NearPole);

  const ZetaApproxEvaluator eval(0.6, 2000.0);
  std::vector<cd> grid(700);
  eval.evaluate_grid(100.0, 0.37, grid);
  for (std::size_t j = 0; j < grid.size(); j += 37) {
    const cd pointwise = zeta_approx(0.6, 100.0 + 0.37 * static_cast<double>(j), 2000.0);
    CHECK(std::abs(grid[j] - pointwise) < 1e-9);
  }
}

TEST_CASE("zeta oracle") {
  CHECK(std::abs(zeta_oracle(2.0, 0.0) - std::numbers::pi * std::numbers::pi / 6.0) < 1e-10);
  CHECK(std::abs(zeta_oracle(0.5, 0.0) - (-1.4603545088095868)) < 1e-10);
  CHECK(std::abs(zeta_oracle(0.5, 14.134725)) < 1e-4);
  CHECK(std::abs(zeta_oracle(1.0, 1.0) - zeta_approx(1.0, 1.0, 1e5)) < 1e-4);

  for (const auto& [sigma, t] : std::vector<std::pair<double, double>>{
           {0.5, 10.0}, {0.5, 100.0}, {0.6, 523.7}, {0.75, 1000.0}, {1.0, 77.0}, {0.55, 4000.0}}) {
    const cd expected = zeta_euler_maclaurin(sigma, t);
    CHECK(std::abs(zeta_oracle(sigma, t) - expected) < 1e-9 * std::max(1.0, std::abs(expected)));
  }

  CHECK(kind_of([] { zeta_oracle(1.0, 0.0); }) == ErrorKind::Domain);
  CHECK(kind_of([] { zeta_oracle(1.0, 2.0 * std::numbers::pi / std::log(2.0)); }) ==
        ErrorKind::RemovableSingularity);
}

TEST_CASE("partial sums and resonator evaluation") {
  CHECK(std::abs(partial_sum(1, 123.4) - cd(1.0, 0.0)) < 1e-15);
  CHECK(partial_sum(4, 0.0).real() == doctest::Approx(1.0 + 1.0 / std::sqrt(2.0) + 1.0 / std::sqrt(3.0) + 0.5));
  CHECK(partial_sum(4, 0.0).real() == doctest::Approx(2.7844571).epsilon(1e-7));
  double total = 0.0;
  for (int n = 1; n <= 500; ++n) total += 1.0 / std::sqrt(n);
  for (double t = 0.0; t < 1000.0; t += 17.3) CHECK(std::abs(partial_sum(500, t)) <= total + 1e-12);

  const ResonatorSet g = gal_divisor_set(table(), 7, 2, 1000);
  CHECK(resonator_eval(g, 0.0).real() == doctest::Approx(g.weight_sum()));
  CHECK(std::abs(resonator_eval(g, 0.0).imag()) < 1e-15);
  for (double t = 0.1; t < 500.0; t += 3.7) CHECK(std::abs(resonator_eval(g, t)) <= g.weight_sum() + 1e-12);
  for (double t : {0.0, 1.0, 55.5, 1e4}) CHECK(std::abs(resonator_eval(singleton(6, 0.3), t)) == doctest::Approx(0.3));
}

TEST_CASE("Dirichlet grid evaluation matches pointwise sums") {
  std::vector<double> c;
  std::vector<double> f;
  for (int n = 1; n <= 301; ++n) {
    c.push_back(1.0 / std::sqrt(n));
    f.push_back(std::log(n) * 1.3);
  }
  const DirichletSeries series(c, f);
  std::vector<cd> grid(1000);
  series.evaluate_grid(-50.0, 0.11, grid);
  for (std::size_t j = 0; j < grid.size(); j += 13) CHECK(std::abs(grid[j] - series(-50.0 + 0.11 * j)) < 1e-10);
}

TEST_CASE("bump and Gaussian mollifiers") {
  CHECK(bump_psi(0.7) == 1.0);
  CHECK(bump_psi(0.4) == 0.0);
  CHECK(bump_psi(1.2) == 0.0);
  const double v = bump_psi(9.0 / 16.0);
  CHECK(v > 0.0);
  CHECK(v < 1.0);
  CHECK(v == doctest::Approx(1.0 - bump_psi(15.0 / 16.0)));
  for (double u = 0.5; u <= 1.0; u += 0.01) CHECK(bump_psi(u) == doctest::Approx(bump_psi(1.5 - u)).epsilon(1e-12));
  CHECK(bump_integral() == doctest::Approx(0.375).epsilon(1e-12));
  CHECK(simpson([](double u) { return bump_psi(u); }, 0.5, 1.0, 20000) == doctest::Approx(0.375).epsilon(1e-9));
  CHECK(gaussian_phi(0.0) == 1.0);
  CHECK(gaussian_phi(2.0) == doctest::Approx(std::exp(-2.0)));
}

TEST_CASE("bump moments") {
  const double T = 5000.0;
  const MomentReport one = bump_moments(singleton(1, 1.0), 1.0, T);
  CHECK(one.m1 == doctest::Approx(T * 0.375).epsilon(1e-8));
  CHECK(one.m1_predicted == doctest::Approx(T * 0.375).epsilon(1e-12));
  CHECK(one.refinement_delta < 1e-3);
  CHECK(one.certificate <= one.peak_abs);

  const ResonatorSet g = gal_divisor_set(table(), 5, 2, 1000);
  const MomentReport r = bump_moments(g, 1.0, T);
  CHECK(std::abs(r.m1 / r.m1_predicted - 1.0) < 0.05);
  CHECK(std::abs(r.certificate / (77.0 / 48.0) - 1.0) < 0.10);
  CHECK(r.m2_predicted == doctest::Approx(T * 0.375 * 77.0 / 6.0).epsilon(1e-12));

  MomentOptions capped;
  capped.max_T = 1000.0;
  CHECK(kind_of([&] { bump_moments(g, 1.0, T, capped); }) == ErrorKind::Resource);
  CHECK(kind_of([&] { bump_moments(g, 1.5, T); }) == ErrorKind::Domain);
  CHECK_THROWS_AS(bump_moments(g, 1.0, 20.0), Error);

  MomentOptions strict;
  strict.gate = 1e-30;
  strict.max_halvings = 1;
  CHECK(kind_of([&] { bump_moments(g, 1.0, T, strict); }) == ErrorKind::Convergence);
}

TEST_CASE("Gaussian moments") {
  const double T = 1e4;
  const double kappa = std::log(T) / T;
  const double closed = gaussian_weight_integral(T);
  const double numeric =
      2.0 * simpson([&](double t) { return std::exp(-0.5 * kappa * kappa * t * t); }, std::sqrt(T), T, 200000);
  CHECK(closed == doctest::Approx(numeric).epsilon(1e-10));

  const MomentReport one = gaussian_moments(singleton(1, 1.0), 0.6, T, MomentTarget::zeta());
  CHECK(one.m1 == doctest::Approx(closed).epsilon(1e-8));
  CHECK(one.tail_mass > 0.0);
  CHECK(one.tail_bound_m1 == doctest::Approx(one.tail_mass));

  const ResonatorSet g = gal_divisor_set(table(), 5, 2, 1000);
  const MomentReport d1 = gaussian_moments(g, 0.5, T, MomentTarget::partial_sum(1));
  CHECK(d1.m2.real() == doctest::Approx(d1.m1).epsilon(1e-12));
  CHECK(std::abs(d1.m2.imag()) < 1e-12 * d1.m1);
  CHECK(kind_of([&] { gaussian_moments(g, 0.6, T, MomentTarget::partial_sum(10)); }) == ErrorKind::Parameter);
}

TEST_CASE("tail integral") {
  const TailIntegralReport one = tail_integral_check(1, 0.6, 1e4, 1);
  REQUIRE(one.samples.size() == 1);
  CHECK(one.samples[0].lambda == 1.0);
  CHECK(one.max_ratio <= 2.0);

  const TailIntegralReport r = tail_integral_check(1000, 0.6, 1e4, 50);
  CHECK(r.samples.size() == 50);
  CHECK(std::isfinite(r.max_ratio));
  CHECK(r.stability <= 0.1);
}

TEST_CASE("scan") {
  ScanOptions options;
  options.budget = 200;
  const ScanResult constant = scan_max(ScanEvaluator::partial_sum(1), 10.0, 20.0, options);
  CHECK(constant.value == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(constant.t_star >= 10.0);
  CHECK(constant.t_star <= 20.0);

  options.budget = 10'000;
  options.seed = 42;
  const ScanResult a = scan_max(ScanEvaluator::zeta(0.5, 1e4), 100.0, 200.0, options);
  const ScanResult b = scan_max(ScanEvaluator::zeta(0.5, 1e4), 100.0, 200.0, options);
  CHECK(a.value >= 2.0);
  CHECK(a.evaluations <= a.budget);
  CHECK(a.t_star == b.t_star);
  CHECK(a.value == b.value);
  CHECK(a.value == doctest::Approx(std::abs(zeta_approx(0.5, a.t_star, 1e4))).epsilon(1e-12));
}

TEST_CASE("certificates have witnesses") {
  const Certificate one = certify_lower_bound(singleton(1, 1.0), 1.0, 5000.0, Mollifier::Bump);
  CHECK(one.certificate <= one.witness.value * (1.0 + 1e-6));
  CHECK(one.witness_ratio >= 1.0 - 1e-6);

  const ResonatorSet g = gal_divisor_set(table(), 5, 2, 1000);
  const Certificate c = certify_lower_bound(g, 1.0, 5000.0, Mollifier::Bump);
  CHECK(c.certificate == doctest::Approx(1.6).epsilon(0.1));
  CHECK(c.witness.value >= c.certificate * (1.0 - 1e-6));
  REQUIRE(c.oracle_value.has_value());
  CHECK(*c.oracle_value == doctest::Approx(c.witness.value).epsilon(1e-3));
}
