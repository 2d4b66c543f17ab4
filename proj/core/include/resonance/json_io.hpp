#pragma once

#include <filesystem>

#include <nlohmann/json.hpp>

#include "resonance/bounds.hpp"
#include "resonance/certify.hpp"
#include "resonance/moments.hpp"
#include "resonance/params.hpp"
#include "resonance/quadform.hpp"
#include "resonance/resonator_set.hpp"
#include "resonance/scan.hpp"

namespace resonance {

void to_json(nlohmann::json& j, const ConstructionParams& p);
void from_json(const nlohmann::json& j, ConstructionParams& p);

/// {kind, params, notes, elements: [{factors: [[p, e], ...], weight}]}.
/// Doubles are written with round-trip precision, so reading back is exact.
nlohmann::json resonator_set_to_json(const ResonatorSet& set);
ResonatorSet resonator_set_from_json(const nlohmann::json& j);

void to_json(nlohmann::json& j, const QuadFormReport& r);  // kLimit = null when infinite
void to_json(nlohmann::json& j, const MomentReport& r);
void to_json(nlohmann::json& j, const ScanResult& r);
void to_json(nlohmann::json& j, const BoundProfile& r);
void to_json(nlohmann::json& j, const TailIntegralReport& r);
void to_json(nlohmann::json& j, const Certificate& r);

nlohmann::json read_json_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace resonance
