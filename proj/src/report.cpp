#include "sigma_spectra/report.hpp"

#include <fstream>
#include <sstream>

#include "sigma_spectra/errors.hpp"

namespace sigma_spectra {

namespace {

Verdict verdict_from_string(const std::string& s) {
  if (s == "feasible") return Verdict::feasible;
  if (s == "infeasible") return Verdict::infeasible;
  if (s == "unknown") return Verdict::unknown;
  throw MalformedInput("unknown verdict \"" + s + "\"");
}

template <class F>
auto guarded(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw MalformedInput(e.what());
  } catch (const DimensionMismatch& e) {
    throw MalformedInput(e.what());
  } catch (const InvalidPartition& e) {
    throw MalformedInput(e.what());
  } catch (const DomainError& e) {
    throw MalformedInput(e.what());
  }
}

json optional_int(const std::optional<int>& v) { return v ? json(*v) : json(nullptr); }

}  // namespace

json to_json(const Sigma& sigma) { return sigma.parts(); }

json to_json(const HypergraphSpec& spec) {
  return {{"n", spec.n}, {"r", spec.r()}, {"q", spec.q}, {"sigma", to_json(spec.sigma)},
          {"alpha", spec.alpha}, {"beta", spec.beta}};
}

json to_json(const Colouring& colouring) {
  return {{"n", colouring.n()}, {"q", colouring.q()}, {"classes", colouring.classes()}};
}

json to_json(const IntInterval& interval) { return json::array({interval.lo, interval.hi}); }

json to_json(const KDecision& decision) {
  json j = {{"k", decision.k}, {"verdict", to_string(decision.verdict)}, {"nodes", decision.nodes}};
  j["witness"] = decision.witness ? to_json(*decision.witness) : json(nullptr);
  return j;
}

json to_json(const SpectrumResult& result) {
  json gaps = json::array();
  for (const auto& g : result.gaps) gaps.push_back(to_json(g));
  json decisions = json::array();
  for (const auto& d : result.decisions) decisions.push_back(to_json(d));
  return {{"feasible_k", result.feasible_k},
          {"unknown_k", result.unknown_k},
          {"chi", optional_int(result.chi)},
          {"chi_bar", optional_int(result.chi_bar)},
          {"gaps", gaps},
          {"colourable", result.colourable},
          {"complete", result.complete},
          {"k_max", result.k_max},
          {"decisions", decisions}};
}

json to_json(const EdgeWitness& witness) {
  json choices = json::array();
  for (const auto& choice : witness.per_class_choice) {
    json entry = json::array();
    for (const auto& [c, m] : choice) entry.push_back({{"colour", c}, {"count", m}});
    choices.push_back(entry);
  }
  return {{"class_tuple", witness.class_tuple},
          {"part_assignment", witness.part_assignment},
          {"per_class_choice", choices},
          {"distinct_colours", witness.distinct_colours}};
}

json to_json(const WalkStep& step) {
  json moves = json::array();
  for (const auto& m : step.moves) {
    moves.push_back({{"class_index", m.class_index},
                     {"kind", to_string(m.kind)},
                     {"colours_before", m.colours_before},
                     {"colours_after", m.colours_after}});
  }
  return {{"colouring", to_json(step.colouring)},
          {"colour_count", step.colour_count},
          {"valid", step.valid},
          {"fallback", step.fallback},
          {"moves", moves}};
}

Sigma sigma_from_json(const json& j) {
  return guarded([&] { return Sigma::build(j.get<std::vector<int>>()); });
}

HypergraphSpec spec_from_json(const json& j) {
  return guarded([&] {
    auto sigma = sigma_from_json(j.at("sigma"));
    const int r = j.at("r").get<int>();
    if (r != sigma.r()) {
      throw MalformedInput("r = " + std::to_string(r) + " but sigma " + sigma.to_string() + " sums to " +
                           std::to_string(sigma.r()));
    }
    return HypergraphSpec::make(j.at("n").get<int>(), j.at("q").get<int>(), std::move(sigma),
                                j.at("alpha").get<int>(), j.at("beta").get<int>());
  });
}

Colouring colouring_from_json(const json& j) {
  return guarded([&] {
    Colouring c(j.at("classes").get<std::vector<std::vector<Colour>>>());
    if (j.contains("n") && j.at("n").get<int>() != c.n()) throw MalformedInput("\"n\" does not match classes");
    if (j.contains("q") && j.at("q").get<int>() != c.q()) throw MalformedInput("\"q\" does not match classes");
    return c;
  });
}

SpectrumResult spectrum_from_json(const json& j) {
  return guarded([&] {
    SpectrumResult r;
    r.feasible_k = j.at("feasible_k").get<std::vector<int>>();
    r.unknown_k = j.at("unknown_k").get<std::vector<int>>();
    if (!j.at("chi").is_null()) r.chi = j.at("chi").get<int>();
    if (!j.at("chi_bar").is_null()) r.chi_bar = j.at("chi_bar").get<int>();
    for (const auto& g : j.at("gaps")) r.gaps.push_back({g.at(0).get<int>(), g.at(1).get<int>()});
    r.colourable = j.at("colourable").get<bool>();
    r.complete = j.at("complete").get<bool>();
    r.k_max = j.at("k_max").get<int>();
    for (const auto& d : j.at("decisions")) {
      KDecision kd;
      kd.k = d.at("k").get<int>();
      kd.verdict = verdict_from_string(d.at("verdict").get<std::string>());
      kd.nodes = d.at("nodes").get<std::uint64_t>();
      if (!d.at("witness").is_null()) kd.witness = colouring_from_json(d.at("witness"));
      r.decisions.push_back(std::move(kd));
    }
    return r;
  });
}

json parse_json(std::string_view text) {
  return guarded([&] { return json::parse(text); });
}

json read_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MalformedInput("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_json(buf.str());
}

std::string spectrum_csv(const SpectrumResult& result) {
  std::string out = "k,feasible,nodes_explored\n";
  for (const auto& d : result.decisions) {
    const char* cell = d.verdict == Verdict::feasible ? "true" : d.verdict == Verdict::infeasible ? "false" : "unknown";
    out += std::to_string(d.k) + "," + cell + "," + std::to_string(d.nodes) + "\n";
  }
  return out;
}

json to_json(const RunReport& report) {
  return {{"command", report.command},
          {"spec", report.spec ? to_json(*report.spec) : json(nullptr)},
          {"result", report.result},
          {"complete", report.complete},
          {"wall_time_ms", report.wall_time_ms}};
}

RunReport report_from_json(const json& j) {
  return guarded([&] {
    RunReport r;
    r.command = j.at("command").get<std::string>();
    if (!j.at("spec").is_null()) r.spec = spec_from_json(j.at("spec"));
    r.result = j.at("result");
    r.complete = j.at("complete").get<bool>();
    r.wall_time_ms = j.at("wall_time_ms").get<double>();
    return r;
  });
}

}  // namespace sigma_spectra
