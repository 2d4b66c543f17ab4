#include "resonance/checks/gates.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <set>

#include "resonance/bounds.hpp"
#include "resonance/certify.hpp"
#include "resonance/checks/oracles.hpp"
#include "resonance/construct.hpp"
#include "resonance/error.hpp"
#include "resonance/json_io.hpp"
#include "resonance/moments.hpp"
#include "resonance/quadform.hpp"
#include "resonance/rng.hpp"
#include "resonance/scan.hpp"
#include "resonance/zeta.hpp"

namespace resonance::checks {

using nlohmann::json;

namespace {

constexpr std::uint64_t kTableLimit = 1'000'000;

double rel_diff(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

std::vector<std::uint64_t> as_u64(const ResonatorSet& set) {
  std::vector<std::uint64_t> out;
  for (const auto& e : set.elements()) out.push_back(*e.value.to_u64());
  return out;
}

std::vector<double> weights_of(const ResonatorSet& set) {
  std::vector<double> out;
  for (const auto& e : set.elements()) out.push_back(e.weight);
  return out;
}

// ---------------------------------------------------------------------------
// Acceptance criteria
// ---------------------------------------------------------------------------

GateResult gal_product_oracle(Context& ctx) {
  GateResult r;
  double max_product = 0.0;
  double max_brute = 0.0;
  int cases = 0;
  for (int x = 2; x <= 13; ++x) {
    for (std::uint32_t ell = 1; ell <= 3; ++ell) {
      const ResonatorSet set = gal_divisor_set(ctx.table(), x, ell, 1'000'000);
      const auto values = as_u64(set);
      const auto weights = weights_of(set);
      for (const double sigma : {0.6, 0.75, 1.0}) {
        const double ratio = resonance_ratio(set, sigma).ratio;
        max_product = std::max(max_product, rel_diff(ratio, gal_ratio_product(ctx.table(), x, ell, sigma)));
        max_brute = std::max(max_brute, rel_diff(ratio, brute_ratio(values, weights, sigma, INFINITY)));
        ++cases;
      }
    }
  }
  const double exact = resonance_ratio(gal_divisor_set(ctx.table(), 5, 2, 100), 1.0).ratio;
  const double exact_err = rel_diff(exact, 77.0 / 48.0);
  r.measured = {{"cases", cases},
                {"maxRelProductVsRatio", max_product},
                {"maxRelBruteVsRatio", max_brute},
                {"ratio_x5_l2_s1", exact},
                {"relErrVs77over48", exact_err}};
  r.pass = max_product <= 1e-12 && max_brute <= 1e-12 && exact_err <= 1e-12;
  return r;
}

GateResult a_product_oracle(Context& ctx) {
  GateResult r;
  RandomStream rng(ctx.seed(), "a-product-bands");
  const auto pool = primes_in_band(ctx.table(), 100, 5000);
  double max_rel = 0.0;
  json bands = json::array();
  for (int i = 0; i < 20; ++i) {
    const std::size_t size = 1 + static_cast<std::size_t>(i) % 12;
    std::set<std::uint64_t> chosen;
    while (chosen.size() < size) chosen.insert(pool[rng.below(pool.size())]);
    const std::vector<std::uint64_t> band(chosen.begin(), chosen.end());
    std::vector<double> w(size);
    for (auto& v : w) v = 0.05 + 0.95 * rng.uniform();
    const double sigma = 0.5 + 0.25 * rng.uniform();
    const double fast = a_product(band, w, sigma);
    const double direct = a_product_direct(band, w, sigma);
    max_rel = std::max(max_rel, rel_diff(fast, direct));
    bands.push_back({{"primes", size}, {"sigma", sigma}, {"product", fast}, {"direct", direct}});
  }
  r.measured = {{"bands", 20}, {"maxRel", max_rel}, {"samples", bands}};
  r.pass = max_rel <= 1e-9;
  return r;
}

// Random square-free support element with `want` factors that respects every
// block allowance of `spec`.
FactoredInt random_support_element(const SupportSpec& spec, std::size_t want, RandomStream& rng) {
  std::vector<int> used(spec.max_per_block.size(), 0);
  std::vector<std::size_t> candidates;
  for (std::size_t i = 0; i < spec.primes.size(); ++i) {
    if (spec.max_per_block[spec.block_of[i]] > 0) candidates.push_back(i);
  }
  std::vector<std::uint64_t> picked;
  while (picked.size() < want && !candidates.empty()) {
    const std::size_t slot = rng.below(candidates.size());
    const std::size_t i = candidates[slot];
    candidates.erase(candidates.begin() + static_cast<std::ptrdiff_t>(slot));
    const int b = spec.block_of[i];
    if (used[b] >= spec.max_per_block[b]) continue;
    ++used[b];
    picked.push_back(spec.primes[i]);
  }
  std::sort(picked.begin(), picked.end());
  return FactoredInt::square_free(picked);
}

GateResult rankin_tails(Context& ctx) {
  GateResult r;
  RandomStream rng(ctx.seed(), "rankin-samples");
  bool all_dominated = true;
  bool enough_below_one = true;
  json constructions = json::array();
  for (const double sigma : {0.55, 0.6, 0.7}) {
    const ConstructionParams params = near_half_defaults(1e16, sigma);
    validate_near_half(params);
    const SupportSpec spec = near_half_support_spec(ctx.table(), params);
    std::map<std::uint64_t, double> weight;
    for (std::size_t i = 0; i < spec.primes.size(); ++i) weight[spec.primes[i]] = spec.weights[i];
    const auto f = [&](std::uint64_t p) { return weight.at(p); };
    const double log_m = rankin_log_threshold(params.N, sigma);
    const double delta = 1.0 / std::log(std::log(static_cast<double>(params.N)));

    int dominated = 0;
    int below_one = 0;
    int nonzero = 0;
    double max_exact = 0.0;
    double max_ratio = 0.0;
    std::size_t max_factors = 0;
    for (int s = 0; s < 100; ++s) {
      const std::size_t want = 4 + rng.below(9);
      const FactoredInt n = random_support_element(spec, want, rng);
      const RankinTail tail = rankin_tail(n, f, sigma, log_m, delta);
      const double exact = tail.exact.value();
      if (exact <= tail.bound * (1.0 + 1e-12)) ++dominated;
      if (exact < 1.0) ++below_one;
      if (exact > 0.0) ++nonzero;
      max_exact = std::max(max_exact, exact);
      max_ratio = std::max(max_ratio, exact / tail.bound);
      max_factors = std::max(max_factors, n.omega());
    }
    all_dominated = all_dominated && dominated == 100;
    enough_below_one = enough_below_one && below_one >= 95;
    constructions.push_back({{"sigma", sigma},
                             {"N", params.N},
                             {"delta", delta},
                             {"logM", log_m},
                             {"bandPrimes", spec.primes.size()},
                             {"dominated", dominated},
                             {"exactBelowOne", below_one},
                             {"nonzeroTails", nonzero},
                             {"maxExact", max_exact},
                             {"maxExactOverBound", max_ratio},
                             {"maxFactors", max_factors}});
  }
  r.measured = {{"samplesPerConstruction", 100}, {"constructions", constructions}};
  r.pass = all_dominated && enough_below_one;
  return r;
}

GateResult prime_count_inequality(Context& ctx) {
  GateResult r;
  const auto primes = ctx.table().primes();
  std::size_t pi = 0;
  std::uint64_t failures = 0;
  std::uint64_t first_failure = 0;
  double min_margin = INFINITY;
  for (std::uint64_t x = 2; x <= kTableLimit; ++x) {
    while (pi < primes.size() && primes[pi] <= x) ++pi;
    if (x < 17) continue;
    const double xd = static_cast<double>(x);
    const double margin = static_cast<double>(pi) * std::log(xd) / xd;
    min_margin = std::min(min_margin, margin);
    if (!(static_cast<double>(pi) * std::log(xd) > xd)) {
      if (failures++ == 0) first_failure = x;
    }
  }
  r.measured = {{"range", json::array({17, kTableLimit})},
                {"failures", failures},
                {"minPiLogXOverX", min_margin},
                {"pi1e6", ctx.table().pi(1e6)}};
  if (failures > 0) r.measured["firstFailure"] = first_failure;
  r.pass = failures == 0;
  return r;
}

GateResult mertens(Context& ctx) {
  GateResult r;
  json devs = json::object();
  std::map<int, double> dev;
  for (const int e : {3, 4, 5, 6}) {
    const double x = std::pow(10.0, e);
    const double ratio = mertens_product(ctx.table(), x) / (std::exp(kEulerGamma) * std::log(x));
    dev[e] = std::abs(ratio - 1.0);
    devs["1e" + std::to_string(e)] = ratio;
  }
  r.measured = {{"ratioVsExpGammaLogX", devs}, {"deviation1e3", dev[3]}, {"deviation1e6", dev[6]}};
  const double ratio5 = devs["1e5"].get<double>();
  r.pass = ratio5 >= 0.99 && ratio5 <= 1.01 && dev[6] < dev[3];
  return r;
}

GateResult psum_gap(Context& ctx) {
  GateResult r;
  const std::vector<double> sigmas = {0.55, 0.60, 0.65, 0.70, 0.75, 0.80, 0.85, 0.90};
  double grid_min = INFINITY;
  double arg_sigma = 0.0;
  double arg_x = 0.0;
  int skipped = 0;
  int points = 0;
  // Minimum of the gap over each x-decade 10^d <= x < 10^(d+1), ten points per decade.
  std::map<int, double> decade_min;
  for (int k = 0; k <= 40; ++k) {
    const double x = std::pow(10.0, 2.0 + k / 10.0);
    const int decade = std::min(2 + k / 10, 5);
    for (const double sigma : sigmas) {
      if ((1.0 - sigma) * std::log(x) < 0.5) {
        ++skipped;
        continue;
      }
      const PsumEstimate est = psum_estimate(ctx.table(), sigma, x);
      ++points;
      auto [it, fresh] = decade_min.emplace(decade, est.gap);
      if (!fresh) it->second = std::min(it->second, est.gap);
      if (est.gap < grid_min) {
        grid_min = est.gap;
        arg_sigma = sigma;
        arg_x = x;
      }
    }
  }
  // Running minimum over x <= 10^(d+1): once the grid minimum is attained it
  // must not move by more than 0.1 when further decades are added.
  json running = json::object();
  double run = INFINITY;
  double max_shift = 0.0;
  bool first = true;
  for (const auto& [d, m] : decade_min) {
    const double next = std::min(run, m);
    if (!first) max_shift = std::max(max_shift, run - next);
    run = next;
    first = false;
    running["1e" + std::to_string(d)] = run;
  }
  json per_decade = json::object();
  for (const auto& [d, m] : decade_min) per_decade["1e" + std::to_string(d)] = m;
  r.measured = {{"points", points},
                {"skippedByGuard", skipped},
                {"gridMin", grid_min},
                {"argmin", {{"sigma", arg_sigma}, {"x", arg_x}}},
                {"decadeMin", per_decade},
                {"runningMin", running},
                {"maxRunningShift", max_shift}};
  r.pass = std::isfinite(grid_min) && max_shift <= 0.1;
  return r;
}

GateResult zeta_evaluation(Context&) {
  GateResult r;
  const double x = 1000.0;
  double worst = 0.0;
  bool within = true;
  json rows = json::array();
  for (const double sigma : {0.5, 0.6, 0.75, 1.0}) {
    for (const double t : {0.0, 10.0, 100.0, 999.0}) {
      if (sigma == 1.0 && t == 0.0) {
        rows.push_back({{"sigma", sigma}, {"t", t}, {"skipped", "pole"}});
        continue;
      }
      const double diff = std::abs(zeta_approx(sigma, t, x) - zeta_oracle(sigma, t));
      const double allowed = 5.0 * std::pow(x, -sigma);
      worst = std::max(worst, diff / allowed);
      within = within && diff <= allowed;
      rows.push_back({{"sigma", sigma}, {"t", t}, {"diff", diff}, {"allowed", allowed}});
    }
  }
  const double z2 = std::abs(zeta_oracle(2.0, 0.0) - std::numbers::pi * std::numbers::pi / 6.0);
  const double zero = std::abs(zeta_oracle(0.5, 14.134725));
  r.measured = {{"grid", rows}, {"worstDiffOverAllowed", worst}, {"zeta2Error", z2}, {"absAtFirstZero", zero}};
  r.pass = within && z2 <= 1e-8 && zero < 1e-4;
  return r;
}

GateResult moment_crosscheck(Context& ctx) {
  GateResult r;
  const ResonatorSet set = gal_divisor_set(ctx.table(), 5, 2, 100);
  const MomentReport m = bump_moments(set, 1.0, 5000.0);
  const double m1_err = rel_diff(m.m1, m.m1_predicted);
  const double cert_err = std::abs(m.certificate - 77.0 / 48.0) / (77.0 / 48.0);
  r.measured = {{"report", m}, {"m1RelErr", m1_err}, {"certificateRelErrVs77over48", cert_err}};
  r.pass = m1_err <= 0.05 && cert_err <= 0.10 && m.refinement_delta < 1e-3;
  return r;
}

GateResult certificate_witness(Context& ctx) {
  GateResult r;
  json runs = json::array();
  bool all = true;
  const auto record = [&](const std::string& label, const ResonatorSet& set, double sigma, double T, Mollifier mol) {
    CertifyOptions options;
    options.seed = ctx.seed();
    try {
      const Certificate c = certify_lower_bound(set, sigma, T, mol, options);
      runs.push_back({{"case", label}, {"setSize", set.size()}, {"result", c}, {"witnessFound", true}});
    } catch (const Error& e) {
      all = false;
      runs.push_back({{"case", label}, {"witnessFound", false}, {"error", e.what()}});
    }
  };
  record("gal x=5 ell=2", gal_divisor_set(ctx.table(), 5, 2, 100), 1.0, 5000.0, Mollifier::Bump);
  const GalParams g = gal_params_for(1e4);
  record("gal per gal_params_for(1e4)", gal_divisor_set(ctx.table(), g.x, g.ell, 100), 0.75, 1e4, Mollifier::Bump);
  const ConstructionParams p = near_half_defaults(1e4, 0.55);
  const ResonatorSet support = enumerate_support(ctx.table(), p, p.N);
  record("near-half discretized", additive_discretize(support, 1e4), 0.55, 1e4, Mollifier::Gaussian);
  r.measured = {{"runs", runs}};
  r.pass = all;
  return r;
}

GateResult discretization_sandwich(Context& ctx) {
  GateResult r;
  RandomStream rng(ctx.seed(), "discretize-sets");
  bool ok = true;
  double min_lower = INFINITY;
  double max_upper = 0.0;
  json rows = json::array();
  for (int i = 0; i < 20; ++i) {
    const double T = i < 10 ? 1e2 : 1e4;
    const std::size_t size = 50 + rng.below(351);
    std::set<std::uint64_t> values;
    while (values.size() < size) values.insert(1 + rng.below(1'000'000));
    std::vector<WeightedElement> elements;
    for (const auto v : values) elements.push_back({FactoredInt::from_integer(v), 0.1 + 1.9 * rng.uniform()});
    const ResonatorSet set(SetKind::Discretized, ConstructionParams{}, std::move(elements));
    const ResonatorSet out = additive_discretize(set, T);
    const double f2 = set.weight_square_sum();
    const double r2 = out.weight_square_sum();
    const double cap = 2.0 * std::pow(std::log(T), 2) + 2.0;
    const bool lower = f2 <= r2 * (1.0 + 1e-12);
    const bool upper = r2 <= cap * f2;
    ok = ok && lower && upper;
    min_lower = std::min(min_lower, r2 / f2);
    max_upper = std::max(max_upper, r2 / (cap * f2));
    rows.push_back({{"T", T}, {"inputSize", set.size()}, {"outputSize", out.size()}, {"sumF2", f2}, {"sumR2", r2}});
  }
  r.measured = {{"sets", rows}, {"minR2OverF2", min_lower}, {"maxR2OverCapF2", max_upper}};
  r.pass = ok;
  return r;
}

constexpr std::uint64_t kGuidedBudget = 2000;

GateResult guided_scan(Context& ctx) {
  GateResult r;
  const double T = 1e4;
  const ResonatorSet guide = gal_divisor_set(ctx.table(), 13, 2, 100);
  const ScanEvaluator zeta = ScanEvaluator::zeta(0.5, T);
  int wins = 0;
  json trials = json::array();
  for (int i = 0; i < 10; ++i) {
    ScanOptions plain;
    plain.budget = kGuidedBudget;
    plain.seed = ctx.seed() + static_cast<std::uint64_t>(i);
    ScanOptions guided = plain;
    guided.guide = &guide;
    const ScanResult a = scan_max(zeta, std::sqrt(T), T, plain);
    const ScanResult b = scan_max(zeta, std::sqrt(T), T, guided);
    if (b.value >= a.value) ++wins;
    trials.push_back({{"seed", plain.seed}, {"unguided", a.value}, {"guided", b.value}, {"guidedTStar", b.t_star}});
  }
  r.measured = {{"budget", kGuidedBudget}, {"guideSize", guide.size()}, {"trials", trials}, {"guidedWins", wins}};
  r.pass = wins >= 9;
  return r;
}

// ---------------------------------------------------------------------------
// Supporting property checks
// ---------------------------------------------------------------------------

GateResult sieve_agreement(Context& ctx) {
  GateResult r;
  RandomStream rng(ctx.seed(), "sieve-intervals");
  bool ok = true;
  json intervals = json::array();
  for (int i = 0; i < 3; ++i) {
    const std::uint64_t lo = 1 + rng.below(kTableLimit - 10'000);
    const std::uint64_t hi = lo + 9'999;
    const auto sieve = primes_in_band(ctx.table(), static_cast<double>(lo) - 1.0, static_cast<double>(hi));
    const auto trial = primes_by_trial(lo, hi);
    ok = ok && sieve == trial;
    intervals.push_back({{"lo", lo}, {"hi", hi}, {"count", trial.size()}});
  }
  std::uint64_t sampled = 0;
  std::uint64_t composite = 0;
  for (const auto p : ctx.table().primes()) {
    if (rng.below(100) != 0) continue;
    ++sampled;
    if (!is_prime_trial(p)) ++composite;
  }
  r.measured = {{"intervals", intervals}, {"sampledPrimes", sampled}, {"compositesFound", composite}};
  r.pass = ok && composite == 0;
  return r;
}

GateResult support_structure(Context& ctx) {
  GateResult r;
  ConstructionParams p = near_half_defaults(1e8, 0.6);
  const ResonatorSet set = enumerate_support(ctx.table(), p, 2000);
  const SupportSpec spec = near_half_support_spec(ctx.table(), p);
  std::map<std::uint64_t, int> block;
  for (std::size_t i = 0; i < spec.primes.size(); ++i) block[spec.primes[i]] = spec.block_of[i];
  bool square_free = true;
  bool thresholds = true;
  for (const auto& e : set.elements()) {
    square_free = square_free && e.value.is_square_free();
    std::vector<int> count(spec.max_per_block.size(), 0);
    for (const auto& f : e.value.factors()) ++count[block.at(f.prime)];
    for (std::size_t b = 0; b < count.size(); ++b) thresholds = thresholds && count[b] <= spec.max_per_block[b];
  }
  const bool closed = is_divisor_closed(set);
  const CardinalityBound bound = cardinality_bound(p);
  const BinomialCheck bin1 = binomial_entropy_bound(100, 10);
  const BinomialCheck bin2 = binomial_ratio_bound(8, 3);
  r.measured = {{"N", p.N},
                {"sigma", p.sigma},
                {"size", set.size()},
                {"divisorClosed", closed},
                {"squareFree", square_free},
                {"thresholdsRespected", thresholds},
                {"maxPerBlock", spec.max_per_block},
                {"cardinalityBound",
                 {{"logBinomialProduct", bound.log_binomial_product},
                  {"logClosedForm", bound.log_closed_form},
                  {"logN", bound.log_n},
                  {"withinN", bound.within_n}}},
                {"bin1_100_10", bin1.holds},
                {"bin2_8_3", {{"ratio", bin2.lhs}, {"holds", bin2.holds}}}};
  r.pass = closed && square_free && thresholds && set.size() <= p.N && std::isfinite(bound.log_binomial_product) &&
           bin1.holds && bin2.holds;
  return r;
}

GateResult quadform_orders(Context& ctx) {
  GateResult r;
  bool bernoulli = true;
  bool dominance = true;
  bool monotone = true;
  for (int x : {2, 3, 5, 7, 11, 13}) {
    for (std::uint32_t ell = 1; ell <= 3; ++ell) {
      const ResonatorSet set = gal_divisor_set(ctx.table(), x, ell, 1'000'000);
      for (const double sigma : {0.6, 0.75, 1.0}) {
        bernoulli = bernoulli && gal_bernoulli_lower(ctx.table(), x, ell, sigma) <=
                                     gal_ratio_product(ctx.table(), x, ell, sigma) * (1.0 + 1e-12);
        if (set.size() <= 100) {
          dominance = dominance && resonance_ratio(set, sigma).ratio <= gcd_quadform(set, sigma) * (1.0 + 1e-12);
        }
      }
      double prev = 0.0;
      for (const double k : {1.0, 2.0, 6.0, 30.0, 1e9}) {
        const double v = resonance_ratio(set, 0.75, k).ratio;
        monotone = monotone && v >= prev * (1.0 - 1e-12);
        prev = v;
      }
      prev = INFINITY;
      for (const double sigma : {0.55, 0.6, 0.75, 0.9, 1.0}) {
        const double v = resonance_ratio(set, sigma).ratio;
        monotone = monotone && v <= prev * (1.0 + 1e-12);
        prev = v;
      }
    }
  }
  const ConstructionParams p = near_half_defaults(1e4, 0.6);
  const ResonatorSet support = enumerate_support(ctx.table(), p, p.N);
  const double ratio = resonance_ratio(support, 0.6).ratio;
  const double gcdq = gcd_quadform(support, 0.6);
  dominance = dominance && ratio <= gcdq * (1.0 + 1e-12);
  const auto band = near_half_band(ctx.table(), p.N, p.sigma, p.alpha);
  std::vector<double> w;
  for (const auto q : band) w.push_back(near_half_weight(q, p.N, p.sigma));
  r.measured = {{"bernoulliBelowProduct", bernoulli},
                {"ratioBelowGcdForm", dominance},
                {"monotoneInKLimitAndSigma", monotone},
                {"nearHalf",
                 {{"N", p.N},
                  {"size", support.size()},
                  {"ratio", ratio},
                  {"gcdQuadform", gcdq},
                  {"A", a_product(band, w, p.sigma)},
                  {"lemma1Target", lemma1_lower(p.N, p.sigma, p.alpha)}}}};
  r.pass = bernoulli && dominance && monotone;
  return r;
}

GateResult tail_integral(Context&) {
  GateResult r;
  const TailIntegralReport t = tail_integral_check(1000, 0.6, 1e4, 50);
  const TailIntegralReport one = tail_integral_check(1, 0.6, 1e4, 1);
  r.measured = {{"M", t.M},
                {"scale", t.scale},
                {"maxRatio", t.max_ratio},
                {"maxRatioHalved", t.max_ratio_halved},
                {"stability", t.stability},
                {"ratioM1Lambda1", one.max_ratio}};
  r.pass = t.stability <= 0.1 && one.max_ratio <= 2.0 && std::isfinite(t.max_ratio);
  return r;
}

GateResult short_interval_scan(Context& ctx) {
  GateResult r;
  ScanOptions o;
  o.budget = 10'000;
  o.seed = ctx.seed();
  const ScanResult s = scan_max(ScanEvaluator::zeta(0.5, 1e4), 100.0, 200.0, o);
  const ScanResult one = scan_max(ScanEvaluator::partial_sum(1), 0.0, 50.0, o);
  r.measured = {{"scan", s}, {"constantEvaluatorValue", one.value}};
  r.pass = s.value >= 2.0 && std::abs(one.value - 1.0) <= 1e-12;
  return r;
}

GateResult bound_properties(Context&) {
  GateResult r;
  bool floor_ok = true;
  bool positive = true;
  for (double sigma = 0.51; sigma < 0.995; sigma += 0.01) {
    const NuProfile nu = nu_profile(sigma);
    floor_ok = floor_ok && nu.asym >= nu.floor && std::abs(nu.floor - 1.0 / (2.0 - 2.0 * sigma)) <= 1e-15;
    for (const double T : {16.0, 1e4, 1e8}) positive = positive && predicted_log_max(sigma, T) > 0.0;
  }
  double max_jump = 0.0;
  for (const double edge : {0.6, 0.9}) {
    for (const double T : {1e4, 1e6, 1e8}) {
      const double lo = predicted_max(edge - 1e-9, T);
      const double hi = predicted_max(edge + 1e-9, T);
      max_jump = std::max(max_jump, rel_diff(lo, hi));
    }
  }
  const double e_ratio = e_error_term(0.75, 1e4, 0.1) / (nu_profile(0.75).asym * std::pow(std::log(1e4), 0.25) /
                                                          std::pow(std::log(std::log(1e4)), 0.75));
  const double half = predicted_max(0.5, 1e4);
  const double sqrt_threshold = std::exp(0.5 * partial_sum_log_threshold(1e4));
  const CombinedParams cp = combined_params(0.8, 1e8);
  const bool admissible = cp.log_cardinality <= 0.5 * std::log(1e8) + 1e-12;
  r.measured = {{"nuAsymAboveFloor", floor_ok},
                {"predictedPositive", positive},
                {"maxRelJumpAtBlendEdges", max_jump},
                {"eOverNuTerm_T1e4_s075", e_ratio},
                {"predictedMaxHalf_T1e4", half},
                {"sqrtPartialSumThreshold_T1e4", sqrt_threshold},
                {"combined_s08_T1e8",
                 {{"x", cp.x},
                  {"ell", cp.ell},
                  {"objective", cp.objective},
                  {"objectiveAtHalfX", psum_objective(0.8, cp.x / 2.0)},
                  {"objectiveIncreasing", cp.objective_increasing},
                  {"admissible", admissible}}}};
  r.pass = floor_ok && positive && max_jump <= 0.2 && e_ratio < 1.0 && half < sqrt_threshold && admissible;
  return r;
}

struct Entry {
  GateInfo info;
  std::function<GateResult(Context&)> run;
};

const std::vector<Entry>& entries() {
  static const std::vector<Entry> list = {
      {{"c1", "quadform", "divisor-set product formula equals brute-force ratio"}, gal_product_oracle},
      {{"c2", "quadform", "A(N, sigma) product equals its direct-sum definition"}, a_product_oracle},
      {{"c3", "quadform", "Rankin tail below its bound, and below 1 at the threshold"}, rankin_tails},
      {{"c4", "primes", "pi(x) log x > x for 17 <= x <= 1e6"}, prime_count_inequality},
      {{"c5", "primes", "Mertens product against e^gamma log x"}, mertens},
      {{"c6", "bounds", "prime-sum gap bounded below and stable across decades"}, psum_gap},
      {{"c7", "analytic", "zeta_approx within 5 x^-sigma of the oracle"}, zeta_evaluation},
      {{"c8", "analytic", "bump moments match their diagonal main terms"}, moment_crosscheck},
      {{"c9", "analytic", "every certificate has a scanned witness"}, certificate_witness},
      {{"c10", "construct", "additive discretization sandwich"}, discretization_sandwich},
      {{"c11", "analytic", "resonator-guided scan beats the plain scan"}, guided_scan},
      {{"p-sieve", "primes", "segmented sieve agrees with trial division"}, sieve_agreement},
      {{"p-support", "construct", "near-half support is closed, square-free and pruned"}, support_structure},
      {{"p-quadform", "quadform", "dominance chain and monotonicity"}, quadform_orders},
      {{"p-tail", "analytic", "tail integral ratio stable under refinement"}, tail_integral},
      {{"p-scan", "analytic", "short-interval scan finds a large value"}, short_interval_scan},
      {{"p-bounds", "bounds", "bound profile sanity and parameter rule"}, bound_properties},
  };
  return list;
}

}  // namespace

const PrimeTable& Context::table() {
  if (!built_) {
    table_ = sieve_primes(kTableLimit);
    built_ = true;
  }
  return table_;
}

const std::vector<GateInfo>& gate_catalog() {
  static const std::vector<GateInfo> infos = [] {
    std::vector<GateInfo> out;
    for (const auto& e : entries()) out.push_back(e.info);
    return out;
  }();
  return infos;
}

bool is_acceptance_gate(const std::string& id) { return !id.empty() && id[0] == 'c'; }

GateResult run_gate(const std::string& id, Context& context) {
  for (const auto& e : entries()) {
    if (e.info.id != id) continue;
    GateResult r;
    try {
      r = e.run(context);
    } catch (const Error& err) {
      r.pass = false;
      r.measured = {{"error", err.what()}, {"kind", to_string(err.kind())}};
    }
    r.id = e.info.id;
    r.group = e.info.group;
    r.title = e.info.title;
    return r;
  }
  fail(ErrorKind::Parameter, "unknown gate '" + id + "'");
}

std::vector<GateResult> run_suite(std::uint64_t seed, const std::vector<std::string>& only) {
  for (const auto& name : only) {
    const bool known = std::any_of(gate_catalog().begin(), gate_catalog().end(),
                                   [&](const GateInfo& g) { return g.id == name || g.group == name; });
    require(known, ErrorKind::Parameter, "--only: no gate or group named '" + name + "'");
  }
  Context context(seed);
  std::vector<GateResult> out;
  for (const auto& g : gate_catalog()) {
    const bool selected = only.empty() || std::find(only.begin(), only.end(), g.id) != only.end() ||
                          std::find(only.begin(), only.end(), g.group) != only.end();
    if (selected) out.push_back(run_gate(g.id, context));
  }
  return out;
}

json suite_json(std::uint64_t seed, const std::vector<GateResult>& results) {
  json gates = json::array();
  int passed = 0;
  for (const auto& r : results) {
    if (r.pass) ++passed;
    gates.push_back({{"id", r.id}, {"group", r.group}, {"title", r.title}, {"pass", r.pass}, {"measured", r.measured}});
  }
  return json{{"seed", seed},
              {"gates", gates},
              {"summary", {{"total", results.size()}, {"passed", passed}, {"failed", results.size() - passed}}}};
}

}  // namespace resonance::checks
