#include "resonance/json_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "resonance/error.hpp"

namespace resonance {

using nlohmann::json;

namespace {

json complex_json(std::complex<double> z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

json target_json(const MomentTarget& t) {
  if (t.kind == MomentTarget::Kind::Zeta) return "zeta";
  return json{{"partialSum", t.M}};
}

}  // namespace

void to_json(json& j, const ConstructionParams& p) {
  j = json{{"T", p.T},         {"sigma", p.sigma}, {"N", p.N}, {"x", p.x},         {"ell", p.ell},
           {"alpha", p.alpha}, {"a", p.a},         {"b", p.b}, {"delta", p.delta}, {"beta", p.beta}};
}

void from_json(const json& j, ConstructionParams& p) {
  const ConstructionParams d;
  p.T = j.value("T", d.T);
  p.sigma = j.value("sigma", d.sigma);
  p.N = j.value("N", d.N);
  p.x = j.value("x", d.x);
  p.ell = j.value("ell", d.ell);
  p.alpha = j.value("alpha", d.alpha);
  p.a = j.value("a", d.a);
  p.b = j.value("b", d.b);
  p.delta = j.value("delta", d.delta);
  p.beta = j.value("beta", d.beta);
}

json resonator_set_to_json(const ResonatorSet& set) {
  json elements = json::array();
  for (const auto& e : set.elements()) {
    json factors = json::array();
    for (const auto& f : e.value.factors()) factors.push_back(json::array({f.prime, f.exponent}));
    elements.push_back(json{{"factors", std::move(factors)}, {"weight", e.weight}});
  }
  return json{{"kind", to_string(set.kind())},
              {"params", set.params()},
              {"notes", set.notes()},
              {"size", set.size()},
              {"elements", std::move(elements)}};
}

ResonatorSet resonator_set_from_json(const json& j) {
  try {
    const SetKind kind = set_kind_from_string(j.at("kind").get<std::string>());
    const auto params = j.at("params").get<ConstructionParams>();
    std::vector<std::string> notes;
    if (j.contains("notes")) notes = j.at("notes").get<std::vector<std::string>>();
    std::vector<WeightedElement> elements;
    for (const auto& e : j.at("elements")) {
      std::vector<PrimePower> factors;
      for (const auto& f : e.at("factors")) {
        factors.push_back({f.at(0).get<std::uint64_t>(), f.at(1).get<std::uint32_t>()});
      }
      elements.push_back({FactoredInt(std::move(factors)), e.at("weight").get<double>()});
    }
    return ResonatorSet(kind, params, std::move(elements), std::move(notes));
  } catch (const json::exception& ex) {
    fail(ErrorKind::Io, std::string("malformed resonator set JSON: ") + ex.what());
  }
}

void to_json(json& j, const QuadFormReport& r) {
  j = json{{"numerator", r.numerator},
           {"denominator", r.denominator},
           {"ratio", r.ratio},
           {"termCount", r.term_count},
           {"kLimit", std::isinf(r.k_limit) ? json(nullptr) : json(r.k_limit)}};
}

void to_json(json& j, const MomentReport& r) {
  j = json{{"mollifier", to_string(r.mollifier)},
           {"target", target_json(r.target)},
           {"sigma", r.sigma},
           {"T", r.T},
           {"interval", json::array({r.t_lo, r.t_hi})},
           {"m1", r.m1},
           {"m2", complex_json(r.m2)},
           {"certificate", r.certificate},
           {"quadStep", r.quad_step},
           {"quadPoints", r.quad_points},
           {"refinementDelta", r.refinement_delta},
           {"halvings", r.halvings},
           {"peak", json{{"t", r.peak_t}, {"abs", r.peak_abs}}}};
  if (r.mollifier == Mollifier::Bump) {
    j["m1Predicted"] = r.m1_predicted;
    j["m2Predicted"] = r.m2_predicted;
  } else {
    j["tailMass"] = r.tail_mass;
    j["tailBoundM1"] = r.tail_bound_m1;
  }
}

void to_json(json& j, const ScanResult& r) {
  j = json{{"tStar", r.t_star},
           {"value", r.value},
           {"sigma", r.sigma},
           {"interval", json::array({r.lo, r.hi})},
           {"budget", r.budget},
           {"evaluations", r.evaluations},
           {"strategy", r.strategy},
           {"evaluator", r.evaluator}};
}

void to_json(json& j, const BoundProfile& r) {
  j = json{{"sigma", r.sigma},
           {"T", r.T},
           {"nuFloor", r.nu_floor},
           {"nuAsym", r.nu_asym},
           {"predictedLogMax", r.predicted_log_max},
           {"levinson", r.levinson},
           {"W", r.W},
           {"fghPrediction", r.fgh_prediction},
           {"eulerGamma", r.euler_gamma}};
}

void to_json(json& j, const TailIntegralReport& r) {
  json samples = json::array();
  for (const auto& s : r.samples) samples.push_back(json{{"lambda", s.lambda}, {"value", s.value}, {"ratio", s.ratio}});
  j = json{{"M", r.M},
           {"sigma", r.sigma},
           {"T", r.T},
           {"scale", r.scale},
           {"maxRatio", r.max_ratio},
           {"maxRatioHalved", r.max_ratio_halved},
           {"stability", r.stability},
           {"samples", std::move(samples)}};
}

void to_json(json& j, const Certificate& r) {
  j = json{{"certificate", r.certificate},
           {"moments", r.moments},
           {"witness", r.witness},
           {"witnessRatio", r.witness_ratio},
           {"oracleValue", r.oracle_value ? json(*r.oracle_value) : json(nullptr)}};
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  require(static_cast<bool>(in), ErrorKind::Io, "cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::exception& ex) {
    fail(ErrorKind::Io, "cannot parse " + path.string() + ": " + ex.what());
  }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  require(static_cast<bool>(out), ErrorKind::Io, "cannot write " + path.string());
  out << text;
  require(static_cast<bool>(out), ErrorKind::Io, "write failed for " + path.string());
}

}  // namespace resonance
