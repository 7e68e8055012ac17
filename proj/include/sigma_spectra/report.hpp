#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "sigma_spectra/colouring.hpp"
#include "sigma_spectra/constructions.hpp"
#include "sigma_spectra/engine.hpp"
#include "sigma_spectra/sigma.hpp"
#include "sigma_spectra/validator.hpp"

namespace sigma_spectra {

using json = nlohmann::json;

json to_json(const Sigma& sigma);  // [6, 6]
json to_json(const HypergraphSpec& spec);  // {"n","r","q","sigma","alpha","beta"}
json to_json(const Colouring& colouring);  // {"n","q","classes"}
json to_json(const IntInterval& interval);  // [lo, hi]
json to_json(const KDecision& decision);
json to_json(const SpectrumResult& result);
json to_json(const EdgeWitness& witness);
json to_json(const WalkStep& step);

/// The from_json readers throw MalformedInput on missing or mistyped fields
/// and on dimension mismatches; spec readers also reject r != sum(sigma).
Sigma sigma_from_json(const json& j);
HypergraphSpec spec_from_json(const json& j);
Colouring colouring_from_json(const json& j);
SpectrumResult spectrum_from_json(const json& j);

/// json::parse that reports syntax errors as MalformedInput.
json parse_json(std::string_view text);
json read_json_file(const std::string& path);

/// One row per decided k: "k,feasible,nodes_explored" with feasible one of
/// true, false, unknown. LF line endings.
std::string spectrum_csv(const SpectrumResult& result);

struct RunReport {
  std::string command;
  std::optional<HypergraphSpec> spec;
  json result;  // spectrum, verdict, colouring or suite table
  bool complete = true;
  double wall_time_ms = 0.0;

  friend bool operator==(const RunReport&, const RunReport&) = default;
};

json to_json(const RunReport& report);
RunReport report_from_json(const json& j);

}  // namespace sigma_spectra
