#include "resonance/quadform.hpp"

#include <cmath>
#include <numbers>

#include "resonance/error.hpp"
#include "resonance/summation.hpp"

namespace resonance {

namespace {
// Slack toward inclusion in the k <= kLimit test.
constexpr double kLimitSlack = 1e-12;
}  // namespace

QuadFormReport resonance_ratio(const ResonatorSet& set, double sigma, double k_limit) {
  require(set.size() > 0, ErrorKind::Parameter, "resonance_ratio needs a nonempty set");
  require(sigma > 0.0 && sigma <= 1.0, ErrorKind::Domain, "resonance_ratio needs sigma in (0, 1]");
  require(k_limit >= 1.0, ErrorKind::Parameter, "kLimit must be >= 1");

  const double log_limit = std::isinf(k_limit) ? INFINITY : std::log(k_limit) + kLimitSlack;
  const auto elements = set.elements();
  CompensatedSum numerator;
  QuadFormReport report;
  report.k_limit = k_limit;

  for (const auto& n : elements) {
    const double log_n = n.value.log_value();
    if (n.value.divisor_count(set.size() + 1) <= set.size()) {
      for_each_divisor(n.value, [&](const FactoredInt& m) {
        const double log_k = log_n - m.log_value();
        if (log_k > log_limit) return;
        const auto idx = set.find(m);
        if (!idx) return;
        numerator.add(n.weight * elements[*idx].weight * std::exp(-sigma * log_k));
        ++report.term_count;
      });
    } else {
      for (const auto& m : elements) {
        if (m.value.log_value() > log_n) break;
        const double log_k = log_n - m.value.log_value();
        if (log_k > log_limit || !m.value.divides(n.value)) continue;
        numerator.add(n.weight * m.weight * std::exp(-sigma * log_k));
        ++report.term_count;
      }
    }
  }
  report.numerator = numerator.value();
  report.denominator = set.weight_square_sum();
  report.ratio = report.numerator / report.denominator;
  return report;
}

double gal_ratio_product(const PrimeTable& table, double x, std::uint32_t ell, double sigma) {
  require(x >= 2.0 && ell >= 1, ErrorKind::Parameter, "gal_ratio_product needs x >= 2 and ell >= 1");
  CompensatedSum log_prod;
  for (const std::uint64_t p : table.primes_up_to(x)) {
    CompensatedSum inner;
    for (std::uint32_t v = 1; v < ell; ++v) {
      const double vd = v;
      inner.add((1.0 - vd / ell) * std::exp(-vd * sigma * std::log(static_cast<double>(p))));
    }
    log_prod.add(std::log1p(inner.value()));
  }
  return std::exp(log_prod.value());
}

double gal_bernoulli_lower(const PrimeTable& table, double x, std::uint32_t ell, double sigma) {
  require(x >= 2.0 && ell >= 1, ErrorKind::Parameter, "gal_bernoulli_lower needs x >= 2 and ell >= 1");
  const double exponent = 1.0 - 1.0 / static_cast<double>(ell);
  CompensatedSum log_prod;
  for (const std::uint64_t p : table.primes_up_to(x)) {
    log_prod.add(exponent * std::log1p(std::pow(static_cast<double>(p), -sigma)));
  }
  return std::exp(log_prod.value());
}

double gcd_sum(std::span<const FactoredInt> set, double sigma) {
  CompensatedSum s;
  for (const auto& m : set) {
    for (const auto& n : set) {
      const double log_g = gcd(m, n).log_value();
      s.add(std::exp(sigma * (2.0 * log_g - m.log_value() - n.log_value())));
    }
  }
  return s.value();
}

double gcd_quadform(const ResonatorSet& set, double sigma) {
  require(set.size() > 0, ErrorKind::Parameter, "gcd_quadform needs a nonempty set");
  CompensatedSum s;
  for (const auto& m : set.elements()) {
    for (const auto& n : set.elements()) {
      const double log_g = gcd(m.value, n.value).log_value();
      s.add(m.weight * n.weight * std::exp(sigma * (2.0 * log_g - m.value.log_value() - n.value.log_value())));
    }
  }
  return s.value() / set.weight_square_sum();
}

double a_product(std::span<const std::uint64_t> band, std::span<const double> weights, double sigma) {
  require(band.size() == weights.size(), ErrorKind::Parameter, "band and weights must align");
  CompensatedSum log_prod;
  for (std::size_t i = 0; i < band.size(); ++i) {
    const double f = weights[i];
    require(f > 0.0, ErrorKind::Parameter, "band weights must be positive");
    const double f2 = f * f;
    log_prod.add(std::log1p(f * std::pow(static_cast<double>(band[i]), -sigma) / (1.0 + f2)));
  }
  return std::exp(log_prod.value());
}

double lemma1_lower(std::uint64_t N, double sigma, double alpha) {
  require(sigma > 0.5 && sigma <= 0.75, ErrorKind::Domain, "lemma1_lower needs 1/2 < sigma <= 3/4");
  require(N >= 16, ErrorKind::Parameter, "lemma1_lower needs N >= 16");
  const double g = -std::log(2.0 * sigma - 1.0);
  const double log_n = std::log(static_cast<double>(N));
  const double log2_n = std::log(log_n);
  return std::exp(alpha * std::pow(g, 1.5) / (1.0 + g) * std::pow(log_n, 1.0 - sigma) / std::pow(log2_n, sigma));
}

double rankin_log_threshold(std::uint64_t N, double sigma) {
  require(sigma > 0.5 && sigma <= 0.75, ErrorKind::Domain, "rankin_log_threshold needs 1/2 < sigma <= 3/4");
  require(N >= 16, ErrorKind::Parameter, "rankin_log_threshold needs N >= 16");
  const double g = -std::log(2.0 * sigma - 1.0);
  const double log_n = std::log(static_cast<double>(N));
  const double log2_n = std::log(log_n);
  return std::numbers::e * (std::sqrt(g) + 3.0) * std::pow(log_n * log2_n, 1.0 - sigma);
}

double rankin_log_threshold_critical(std::uint64_t N) {
  require(N >= 16, ErrorKind::Parameter, "rankin_log_threshold_critical needs N >= 16");
  const double log_n = std::log(static_cast<double>(N));
  const double log2_n = std::log(log_n);
  return std::numbers::e * std::sqrt(log_n * log2_n * std::log(log2_n));
}

RankinTail rankin_tail(const FactoredInt& n, const std::function<double(std::uint64_t)>& weight, double sigma,
                       double log_threshold, double delta) {
  require(n.is_square_free(), ErrorKind::Parameter, "rankin_tail needs a square-free n");
  require(log_threshold >= 0.0, ErrorKind::Parameter, "rankin_tail needs M >= 1");
  require(delta > 0.0 && delta < sigma, ErrorKind::Parameter, "rankin_tail needs 0 < delta < sigma");

  const auto factors = n.factors();
  std::vector<double> log_p(factors.size());
  std::vector<double> log_f(factors.size());
  CompensatedSum log_bound;
  log_bound.add(-delta * log_threshold);
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const double f = weight(factors[i].prime);
    require(f > 0.0, ErrorKind::Parameter, "rankin_tail weights must be positive");
    log_p[i] = std::log(static_cast<double>(factors[i].prime));
    log_f[i] = std::log(f);
    log_bound.add(std::log1p(std::exp(-(sigma - delta) * log_p[i] - log_f[i])));
  }

  RankinTail out;
  out.bound = std::exp(log_bound.value());
  if (factors.size() > kRankinMaxFactors) return out;

  CompensatedSum exact;
  const std::uint64_t subsets = 1ULL << factors.size();
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    double log_k = 0.0;
    double log_fk = 0.0;
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (mask >> i & 1ULL) {
        log_k += log_p[i];
        log_fk += log_f[i];
      }
    }
    if (log_k >= log_threshold) exact.add(std::exp(-log_fk - sigma * log_k));
  }
  out.exact = exact.value();
  return out;
}

}  // namespace resonance
