#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>
#include <nlohmann/json.hpp>

#include "resonance/bounds.hpp"
#include "resonance/certify.hpp"
#include "resonance/checks/gates.hpp"
#include "resonance/checks/oracles.hpp"
#include "resonance/construct.hpp"
#include "resonance/error.hpp"
#include "resonance/json_io.hpp"
#include "resonance/quadform.hpp"
#include "resonance/scan.hpp"

using nlohmann::json;
namespace rs = resonance;

namespace {

struct DeskCaps {
  double max_T = 1e5;
  std::uint64_t max_set_size = 1'000'000;
  std::uint64_t max_sieve = 100'000'000;
};

struct RunConfig {
  std::string config_path;
  std::string out_path;
  std::string format = "json";
  std::uint64_t seed = 0;
  std::string runlog_path;
  DeskCaps caps;

  // Construction and analysis parameters.
  std::string kind = "gal";
  std::string set_path;
  bool gal = false;
  double x = 0;
  double scan_x = 0;
  std::uint32_t ell = 2;
  double T = 0;
  double sigma = 0.6;
  std::uint64_t N = 0;
  double alpha = 0;
  double a = 0;
  double b = 0;
  std::uint64_t budget = 0;
  double discretize_T = 0;
  double k_limit = INFINITY;
  bool oracle = false;

  std::string mollifier = "bump";
  double gate = 1e-3;
  double points_per_period = 8;
  int max_halvings = 4;
  double epsilon = 0.2;
  std::uint64_t scan_budget = 4096;

  std::string evaluator = "zeta";
  std::uint64_t M = 0;
  double lo = 0;
  double hi = 0;
  std::string guide_path;

  std::vector<double> sigmas;
  std::vector<double> Ts;
  double c_half = 0.49;
  double c_intermediate = 0.0;

  std::vector<std::string> only;
  bool verify_json = false;
};

// Options that may also come from the JSON config file. Flags given on the
// command line win; config values fill in the rest.
struct Bindable {
  CLI::Option* option;
  std::string key;
  std::function<void(const json&)> assign;
};

template <class T>
Bindable bindable(CLI::Option* option, const std::string& key, T& target) {
  return {option, key, [&target](const json& v) { target = v.get<T>(); }};
}

class Output {
 public:
  explicit Output(const RunConfig& cfg) : cfg_(cfg) {}

  void emit(const std::string& text) const {
    if (cfg_.out_path.empty()) {
      std::cout << text;
    } else {
      rs::write_text_file(cfg_.out_path, text);
    }
  }

  // Human-readable notes go to stderr when the payload is on stdout.
  std::ostream& info() const { return cfg_.out_path.empty() ? std::cerr : std::cout; }

 private:
  const RunConfig& cfg_;
};

std::string dump(const json& j) { return j.dump(2) + "\n"; }

void require_json_format(const RunConfig& cfg, const std::string& command) {
  rs::require(cfg.format == "json", rs::ErrorKind::Parameter, "--format csv is not available for " + command);
}

void append_runlog(const RunConfig& cfg, const json& record) {
  if (cfg.runlog_path.empty()) return;
  std::ofstream out(cfg.runlog_path, std::ios::app);
  rs::require(static_cast<bool>(out), rs::ErrorKind::Io, "cannot open run log " + cfg.runlog_path);
  out << record.dump() << "\n";
}

rs::PrimeTable sieve_for(const RunConfig& cfg, double limit) {
  const auto n = static_cast<std::uint64_t>(std::ceil(std::max(limit, 2.0))) + 1;
  rs::require(n <= cfg.caps.max_sieve, rs::ErrorKind::Resource,
              fmt::format("sieve limit {} exceeds the desk cap maxSieve = {}", n, cfg.caps.max_sieve));
  return rs::sieve_primes(n, cfg.caps.max_sieve);
}

rs::ResonatorSet build_gal(const RunConfig& cfg) {
  double x = cfg.x;
  std::uint32_t ell = cfg.ell;
  if (x <= 0) {
    rs::require(cfg.T > 0, rs::ErrorKind::Parameter, "divisor set needs --x or --T");
    const rs::GalParams g = rs::gal_params_for(cfg.T);
    x = g.x;
    ell = g.ell;
  }
  const rs::PrimeTable table = sieve_for(cfg, x);
  return rs::gal_divisor_set(table, x, ell, cfg.caps.max_set_size);
}

rs::ConstructionParams near_half_params(const RunConfig& cfg) {
  rs::ConstructionParams p;
  if (cfg.T > 0) {
    p = rs::near_half_defaults(cfg.T, cfg.sigma);
  } else {
    rs::require(cfg.N >= 16, rs::ErrorKind::Parameter, "near-half construction needs --N >= 16 or --T");
    p = rs::near_half_defaults(static_cast<double>(cfg.N) * static_cast<double>(cfg.N), cfg.sigma);
  }
  if (cfg.N > 0) {
    p.N = cfg.N;
    p.delta = 1.0 / std::log(std::log(static_cast<double>(p.N)));
  }
  if (cfg.alpha > 0) {
    p.alpha = cfg.alpha;
    if (cfg.a == 0) p.a = 0.5 * (1.0 + 1.0 / p.alpha);
  }
  if (cfg.a > 0) p.a = cfg.a;
  if (cfg.b > 0) p.b = cfg.b;
  return p;
}

rs::ResonatorSet build_near_half(const RunConfig& cfg) {
  const rs::ConstructionParams p = near_half_params(cfg);
  rs::validate_near_half(p);
  const rs::NearHalfScales scales = rs::near_half_scales(p.N, p.sigma, p.alpha);
  const rs::PrimeTable table = sieve_for(cfg, std::max(scales.upper_edge(), 2.0));
  const std::uint64_t budget = cfg.budget > 0 ? cfg.budget : p.N;
  rs::require(budget <= cfg.caps.max_set_size, rs::ErrorKind::Resource,
              fmt::format("budget {} exceeds the desk cap maxSetSize = {}", budget, cfg.caps.max_set_size));
  return rs::enumerate_support(table, p, budget);
}

rs::ResonatorSet load_or_build(const RunConfig& cfg) {
  std::optional<rs::ResonatorSet> set;
  if (!cfg.set_path.empty()) {
    set = rs::resonator_set_from_json(rs::read_json_file(cfg.set_path));
  } else if (cfg.gal || cfg.kind == "gal" || cfg.kind == "gal-divisors") {
    set = build_gal(cfg);
  } else if (cfg.kind == "near-half") {
    set = build_near_half(cfg);
  } else {
    rs::fail(rs::ErrorKind::Parameter, "unknown --kind '" + cfg.kind + "' (expected gal or near-half)");
  }
  if (cfg.discretize_T > 0) set = rs::additive_discretize(*set, cfg.discretize_T);
  rs::require(set->size() <= cfg.caps.max_set_size, rs::ErrorKind::Resource,
              fmt::format("set of {} elements exceeds the desk cap maxSetSize = {}", set->size(),
                          cfg.caps.max_set_size));
  return std::move(*set);
}

int cmd_construct(const RunConfig& cfg) {
  require_json_format(cfg, "construct");
  const rs::ResonatorSet set = load_or_build(cfg);
  const Output out(cfg);
  out.emit(dump(rs::resonator_set_to_json(set)));

  auto& info = out.info();
  fmt::print(info, "kind: {}\nsize: {}\nsum f^2: {:.12g}\nmax log value: {:.12g}\n", rs::to_string(set.kind()),
             set.size(), set.weight_square_sum(), set.max_log_value());
  if (set.kind() == rs::SetKind::NearHalf) {
    const rs::CardinalityBound bound = rs::cardinality_bound(set.params());
    fmt::print(info, "cardinality bound: log {:.6g} vs log N {:.6g} ({})\n", bound.log_binomial_product, bound.log_n,
               bound.within_n ? "within N" : "exceeds N");
  }
  for (const auto& note : set.notes()) fmt::print(info, "note: {}\n", note);
  return 0;
}

int cmd_ratio(const RunConfig& cfg) {
  require_json_format(cfg, "ratio");
  const rs::ResonatorSet set = load_or_build(cfg);
  const rs::QuadFormReport report = rs::resonance_ratio(set, cfg.sigma, cfg.k_limit);
  json j = report;
  j["sigma"] = cfg.sigma;
  if (set.kind() == rs::SetKind::GalDivisors && std::isinf(cfg.k_limit)) {
    const rs::PrimeTable table = sieve_for(cfg, set.params().x);
    j["product"] = rs::gal_ratio_product(table, set.params().x, set.params().ell, cfg.sigma);
  }
  if (cfg.oracle) {
    std::vector<std::uint64_t> values;
    std::vector<double> weights;
    for (const auto& e : set.elements()) {
      const auto v = e.value.to_u64();
      rs::require(v.has_value(), rs::ErrorKind::Parameter, "--oracle needs every element to fit in 64 bits");
      values.push_back(*v);
      weights.push_back(e.weight);
    }
    const double brute = rs::checks::brute_ratio(values, weights, cfg.sigma, cfg.k_limit);
    const bool match = std::abs(brute - report.ratio) <= 1e-12 * std::max(1.0, std::abs(brute));
    j["oracle"] = brute;
    j["oracleMatch"] = match;
    if (!match) {
      Output(cfg).emit(dump(j));
      rs::fail(rs::ErrorKind::ImplementationFault,
               fmt::format("ratio {:.17g} disagrees with brute force {:.17g}", report.ratio, brute));
    }
  }
  Output(cfg).emit(dump(j));
  return 0;
}

rs::MomentOptions moment_options(const RunConfig& cfg) {
  rs::MomentOptions o;
  o.epsilon = cfg.epsilon;
  o.max_T = cfg.caps.max_T;
  o.gate = cfg.gate;
  o.points_per_period = cfg.points_per_period;
  o.max_halvings = cfg.max_halvings;
  return o;
}

int cmd_certify(const RunConfig& cfg) {
  require_json_format(cfg, "certify");
  rs::require(cfg.T > 0, rs::ErrorKind::Parameter, "certify needs --T");
  const rs::ResonatorSet set = load_or_build(cfg);
  rs::CertifyOptions options;
  options.moments = moment_options(cfg);
  options.scan_budget = cfg.scan_budget;
  options.seed = cfg.seed;
  const rs::Certificate c =
      rs::certify_lower_bound(set, cfg.sigma, cfg.T, rs::mollifier_from_string(cfg.mollifier), options);
  json j = c;
  j["setSize"] = set.size();
  j["seed"] = cfg.seed;
  Output(cfg).emit(dump(j));
  append_runlog(cfg, {{"command", "certify"}, {"seed", cfg.seed}, {"certificate", c.certificate}, {"witness", c.witness}});
  return 0;
}

int cmd_scan(const RunConfig& cfg) {
  require_json_format(cfg, "scan");
  rs::require(cfg.hi > cfg.lo, rs::ErrorKind::Parameter, "scan needs --lo < --hi");
  rs::require(std::max(std::abs(cfg.lo), std::abs(cfg.hi)) <= cfg.caps.max_T, rs::ErrorKind::Resource,
              fmt::format("scan interval exceeds the desk cap maxT = {}", cfg.caps.max_T));
  std::optional<rs::ScanEvaluator> evaluator;
  if (cfg.evaluator == "zeta") {
    const double x = cfg.scan_x > 0 ? cfg.scan_x : std::max({cfg.hi, std::abs(cfg.lo), 2.0});
    evaluator = rs::ScanEvaluator::zeta(cfg.sigma, x);
  } else if (cfg.evaluator == "partial-sum") {
    rs::require(cfg.M >= 1, rs::ErrorKind::Parameter, "partial-sum scan needs --M");
    evaluator = rs::ScanEvaluator::partial_sum(cfg.M);
  } else {
    rs::fail(rs::ErrorKind::Parameter, "unknown --evaluator '" + cfg.evaluator + "' (expected zeta or partial-sum)");
  }
  std::optional<rs::ResonatorSet> guide;
  rs::ScanOptions options;
  options.budget = cfg.scan_budget;
  options.seed = cfg.seed;
  if (!cfg.guide_path.empty()) {
    guide = rs::resonator_set_from_json(rs::read_json_file(cfg.guide_path));
    options.guide = &*guide;
  }
  const rs::ScanResult result = rs::scan_max(*evaluator, cfg.lo, cfg.hi, options);
  Output(cfg).emit(dump(json(result)));
  append_runlog(cfg, {{"command", "scan"}, {"seed", cfg.seed}, {"witness", result}});
  return 0;
}

int cmd_bounds(const RunConfig& cfg) {
  rs::require(cfg.format == "json" || cfg.format == "csv", rs::ErrorKind::Parameter, "--format must be json or csv");
  const std::vector<double> sigmas = cfg.sigmas.empty() ? std::vector<double>{0.55, 0.6, 0.75, 0.9} : cfg.sigmas;
  const std::vector<double> Ts = cfg.Ts.empty() ? std::vector<double>{1e4, 1e6, 1e8} : cfg.Ts;
  rs::BoundConstants constants;
  constants.c_half = cfg.c_half;
  constants.c_intermediate = cfg.c_intermediate;
  std::vector<rs::BoundProfile> rows;
  for (const double T : Ts) {
    for (const double s : sigmas) rows.push_back(rs::bound_profile(s, T, constants));
  }
  if (cfg.format == "csv") {
    std::string text = "sigma,T,nuFloor,nuAsym,predictedLogMax,levinson,W,fgh\n";
    for (const auto& r : rows) {
      text += fmt::format("{},{},{:.17g},{:.17g},{:.17g},{:.17g},{:.17g},{:.17g}\n", r.sigma, r.T, r.nu_floor,
                          r.nu_asym, r.predicted_log_max, r.levinson, r.W, r.fgh_prediction);
    }
    Output(cfg).emit(text);
  } else {
    Output(cfg).emit(dump(json(rows)));
  }
  return 0;
}

int cmd_verify(const RunConfig& cfg) {
  const auto results = rs::checks::run_suite(cfg.seed, cfg.only);
  const json report = rs::checks::suite_json(cfg.seed, results);
  bool all = true;
  for (const auto& r : results) all = all && r.pass;
  if (cfg.verify_json) {
    Output(cfg).emit(dump(report));
  } else {
    std::string text;
    for (const auto& r : results) {
      text += fmt::format("{} {:<10} {:<10} {}\n", r.pass ? "PASS" : "FAIL", r.id, r.group, r.title);
      text += fmt::format("     {}\n", r.measured.dump());
    }
    text += fmt::format("{} of {} gates passed\n", report["summary"]["passed"].get<int>(), results.size());
    Output(cfg).emit(text);
  }
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  CLI::App app{"Resonance-method experiments on zeta and Dirichlet partial sums"};
  app.require_subcommand(1);
  app.fallthrough();
  std::vector<Bindable> bindings;

  bindings.push_back(bindable(app.add_option("--out", cfg.out_path, "Write the payload to this file"), "out", cfg.out_path));
  bindings.push_back(bindable(app.add_option("--format", cfg.format, "json or csv")->check(CLI::IsMember({"json", "csv"})),
                          "format", cfg.format));
  bindings.push_back(bindable(app.add_option("--seed", cfg.seed, "Seed for every random choice"), "seed", cfg.seed));
  bindings.push_back(bindable(app.add_option("--runlog", cfg.runlog_path, "Append scan witnesses to this JSONL file"),
                          "runlog", cfg.runlog_path));
  app.add_option("--config", cfg.config_path, "JSON config; command-line flags take precedence");
  bindings.push_back(bindable(app.add_option("--max-T", cfg.caps.max_T, "Desk cap on T"), "maxT", cfg.caps.max_T));
  bindings.push_back(bindable(app.add_option("--max-set-size", cfg.caps.max_set_size, "Desk cap on resonator size"),
                          "maxSetSize", cfg.caps.max_set_size));
  bindings.push_back(bindable(app.add_option("--max-sieve", cfg.caps.max_sieve, "Desk cap on the prime sieve"),
                          "maxSieve", cfg.caps.max_sieve));

  const auto add_set_options = [&](CLI::App* sub) {
    bindings.push_back(bindable(sub->add_option("--kind", cfg.kind, "gal or near-half"), "kind", cfg.kind));
    bindings.push_back(bindable(sub->add_option("--set", cfg.set_path, "Read the resonator set from a JSON file"), "set",
                            cfg.set_path));
    bindings.push_back(bindable(sub->add_option("--x", cfg.x, "Prime cutoff of the divisor set (default: from --T)"), "x", cfg.x));
    bindings.push_back(bindable(sub->add_option("--ell", cfg.ell, "Exponent bound of the divisor set"), "ell", cfg.ell));
    bindings.push_back(bindable(sub->add_option("--N", cfg.N, "Cap on the near-half set size"), "N", cfg.N));
    bindings.push_back(bindable(sub->add_option("--alpha", cfg.alpha, "Band exponent"), "alpha", cfg.alpha));
    bindings.push_back(bindable(sub->add_option("--a", cfg.a, "Pruning density, 1 < a < 1/alpha"), "a", cfg.a));
    bindings.push_back(bindable(sub->add_option("--b", cfg.b, "Free parameter b > 1"), "b", cfg.b));
    bindings.push_back(bindable(sub->add_option("--budget", cfg.budget, "Near-half enumeration budget"), "budget",
                            cfg.budget));
    bindings.push_back(bindable(sub->add_option("--discretize", cfg.discretize_T, "Apply additive discretization at this T"),
                            "discretize", cfg.discretize_T));
  };
  const auto add_sigma = [&](CLI::App* sub) {
    bindings.push_back(bindable(sub->add_option("--sigma", cfg.sigma, "Real part sigma"), "sigma", cfg.sigma));
  };
  const auto add_T = [&](CLI::App* sub, const std::string& help) {
    bindings.push_back(bindable(sub->add_option("--T", cfg.T, help), "T", cfg.T));
  };

  CLI::App* construct = app.add_subcommand("construct", "Build a resonator set and write it as JSON");
  add_set_options(construct);
  add_sigma(construct);
  add_T(construct, "Interval end: divisor-set parameters or near-half defaults");

  CLI::App* ratio = app.add_subcommand("ratio", "Evaluate the resonance quadratic form");
  add_set_options(ratio);
  add_sigma(ratio);
  ratio->add_flag("--gal", cfg.gal, "Use the divisor set of --x, --ell");
  bindings.push_back(bindable(ratio->add_option("--klimit", cfg.k_limit, "Restrict to k <= klimit"), "klimit", cfg.k_limit));
  ratio->add_flag("--oracle", cfg.oracle, "Also evaluate by brute force and require agreement");

  CLI::App* certify = app.add_subcommand("certify", "Certify a lower bound for max |zeta| and find a witness");
  add_set_options(certify);
  add_sigma(certify);
  add_T(certify, "Interval end T");
  certify->add_flag("--gal", cfg.gal, "Use the divisor set of --x, --ell");
  bindings.push_back(bindable(certify->add_option("--mollifier", cfg.mollifier, "bump or gaussian")
                              ->check(CLI::IsMember({"bump", "gaussian"})),
                          "mollifier", cfg.mollifier));
  bindings.push_back(bindable(certify->add_option("--quad-gate", cfg.gate, "Quadrature convergence gate"), "quadGate",
                          cfg.gate));
  bindings.push_back(bindable(certify->add_option("--points-per-period", cfg.points_per_period, "Quadrature density"),
                          "pointsPerPeriod", cfg.points_per_period));
  bindings.push_back(bindable(certify->add_option("--max-halvings", cfg.max_halvings, "Quadrature refinements"),
                          "maxHalvings", cfg.max_halvings));
  bindings.push_back(bindable(certify->add_option("--epsilon", cfg.epsilon, "max element <= T^(1 - epsilon)"), "epsilon",
                          cfg.epsilon));
  bindings.push_back(bindable(certify->add_option("--scan-budget", cfg.scan_budget, "Witness scan budget"), "scanBudget",
                          cfg.scan_budget));

  CLI::App* scan = app.add_subcommand("scan", "Search an interval for large values");
  add_sigma(scan);
  bindings.push_back(bindable(scan->add_option("--evaluator", cfg.evaluator, "zeta or partial-sum"), "evaluator",
                          cfg.evaluator));
  bindings.push_back(bindable(scan->add_option("--x", cfg.scan_x, "Length of the zeta approximation (default: hi)"), "x", cfg.scan_x));
  bindings.push_back(bindable(scan->add_option("--M", cfg.M, "Length of the partial sum"), "M", cfg.M));
  bindings.push_back(bindable(scan->add_option("--lo", cfg.lo, "Interval start")->required(), "lo", cfg.lo));
  bindings.push_back(bindable(scan->add_option("--hi", cfg.hi, "Interval end")->required(), "hi", cfg.hi));
  bindings.push_back(bindable(scan->add_option("--budget", cfg.scan_budget, "Number of evaluations"), "budget",
                          cfg.scan_budget));
  bindings.push_back(bindable(scan->add_option("--guide", cfg.guide_path, "Resonator set JSON used as a guide"), "guide",
                          cfg.guide_path));

  CLI::App* bounds = app.add_subcommand("bounds", "Tabulate the theoretical bound profile");
  bindings.push_back(bindable(bounds->add_option("--sigma", cfg.sigmas, "Values of sigma in (1/2, 1)")->delimiter(','),
                              "sigmas", cfg.sigmas));
  bindings.push_back(bindable(bounds->add_option("--T", cfg.Ts, "Values of T >= 16")->delimiter(','), "Ts",
                              cfg.Ts));
  bindings.push_back(bindable(bounds->add_option("--c-half", cfg.c_half, "Constant of W(T, 1/2)"), "cHalf", cfg.c_half));
  bindings.push_back(bindable(bounds->add_option("--c", cfg.c_intermediate, "Additive exponent constant for sigma >= 3/4"),
                          "c", cfg.c_intermediate));

  CLI::App* verify = app.add_subcommand("verify", "Run the acceptance and property gates");
  bindings.push_back(bindable(verify->add_option("--only", cfg.only, "Gate ids or groups to run"), "only", cfg.only));
  verify->add_flag("--json", cfg.verify_json, "Emit the report as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (!cfg.config_path.empty()) {
      const json config = rs::read_json_file(cfg.config_path);
      // Several subcommands share a key; a flag given to any of them wins.
      std::set<std::string> given;
      for (const auto& b : bindings) {
        if (b.option->count() > 0) given.insert(b.key);
      }
      for (const auto& b : bindings) {
        if (!given.contains(b.key) && config.contains(b.key)) {
          try {
            b.assign(config.at(b.key));
          } catch (const json::exception& e) {
            rs::fail(rs::ErrorKind::Parameter, "config key '" + b.key + "': " + e.what());
          }
        }
      }
    }
    rs::require(cfg.caps.max_T > 0 && cfg.caps.max_set_size > 0 && cfg.caps.max_sieve > 0, rs::ErrorKind::Parameter,
                "desk caps must be positive");

    if (*construct) return cmd_construct(cfg);
    if (*ratio) return cmd_ratio(cfg);
    if (*certify) return cmd_certify(cfg);
    if (*scan) return cmd_scan(cfg);
    if (*bounds) return cmd_bounds(cfg);
    if (*verify) return cmd_verify(cfg);
  } catch (const rs::Error& e) {
    fmt::print(std::cerr, "error: {}\n", e.what());
    return rs::exit_code_for(e.kind());
  } catch (const std::exception& e) {
    fmt::print(std::cerr, "error: {}\n", e.what());
    return 2;
  }
  return 0;
}
