#include "sigma_spectra/verify.hpp"

#include <algorithm>
#include <sstream>

#include "sigma_spectra/closed_forms.hpp"
#include "sigma_spectra/constructions.hpp"
#include "sigma_spectra/engine.hpp"
#include "sigma_spectra/errors.hpp"
#include "sigma_spectra/oracles.hpp"
#include "sigma_spectra/validator.hpp"

namespace sigma_spectra {

namespace {

std::string join(const std::vector<int>& v) {
  std::ostringstream out;
  out << "{";
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  out << "}";
  return out.str();
}

HypergraphSpec spec_of(int n, int q, std::vector<int> parts, int alpha, int beta) {
  return HypergraphSpec::make(n, q, Sigma::build(std::move(parts)), alpha, beta);
}

std::vector<SuiteRow> lemmas_suite() {
  std::vector<SuiteRow> rows;
  for (int a = 2; a <= 7; ++a) {
    for (int d = a; d <= 7; ++d) {
      int bad_f = 0;
      for (int b = a; b <= 8; ++b) {
        if (lemma_f(a, b, d) != oracle::lemma_f_exhaustive(a, b, d)) ++bad_f;
      }
      int bad_b = 0;
      for (int n = 1; n <= 40; ++n) {
        const auto got = lemma_bmin(a, d, n);
        const auto want = oracle::lemma_bmin_exhaustive(a, d, n);
        if (got.feasible != want.has_value() || (want && got.value != *want)) ++bad_b;
      }
      const std::string at = " a=" + std::to_string(a) + " d=" + std::to_string(d);
      rows.push_back({"lemma_f" + at, std::to_string(bad_f) + " mismatches over b in [a,8]", bad_f == 0});
      rows.push_back({"lemma_bmin" + at, std::to_string(bad_b) + " mismatches over n in [1,40]", bad_b == 0});
    }
  }
  return rows;
}

std::vector<SuiteRow> zone_suite(const SuiteOptions& o) {
  std::vector<SuiteRow> rows;
  for (const auto& spec : zone_grid(o.max_n, o.max_q)) {
    const auto zone = mono_zone(spec);
    bool ok = zone.status == ZoneStatus::exists;
    std::string detail;
    for (int k = zone.interval.lo; ok && k <= zone.interval.hi; ++k) {
      const auto c = mono_colouring(spec, k);
      if (c.colour_count() != k || !is_valid(spec, c)) {
        ok = false;
        detail = "mono colouring with k=" + std::to_string(k) + " rejected";
      }
    }
    // every all-monochromatic colouring, one per partition of n
    int least = spec.n + 1;
    for (const auto& part : oracle::partitions(spec.n)) {
      std::vector<std::vector<Colour>> classes;
      for (int c = 0; c < static_cast<int>(part.size()); ++c) {
        for (int i = 0; i < part[c]; ++i) classes.emplace_back(spec.q, c);
      }
      if (is_valid(spec, Colouring(classes))) least = std::min(least, static_cast<int>(part.size()));
    }
    if (ok && least != zone.interval.lo) {
      ok = false;
      detail = "fewest monochromatic colours is " + std::to_string(least);
    }
    if (ok) detail = "zone [" + std::to_string(zone.interval.lo) + "," + std::to_string(zone.interval.hi) + "]";
    rows.push_back({spec.to_string(), detail, ok});
  }
  return rows;
}

SuiteRow spectrum_equals(const HypergraphSpec& spec, const std::vector<int>& want, const SuiteOptions& o) {
  const auto result = spectrum(spec, {.k_max = std::nullopt, .node_budget = o.node_budget});
  const bool ok = result.complete && result.feasible_k == want;
  return {spec.to_string(), "spectrum " + join(result.feasible_k) + (result.complete ? "" : " (incomplete)"), ok};
}

std::vector<int> range(int lo, int hi) {
  std::vector<int> v;
  for (int k = lo; k <= hi; ++k) v.push_back(k);
  return v;
}

std::vector<SuiteRow> zone_only_suite(const SuiteOptions& o) {
  std::vector<SuiteRow> rows;
  const std::vector<HypergraphSpec> grid = {
      spec_of(4, 3, {2, 1}, 2, 2), spec_of(5, 3, {2, 1}, 2, 2), spec_of(4, 3, {2, 2}, 2, 2),
      spec_of(5, 3, {2, 2}, 2, 2), spec_of(6, 3, {2, 2}, 2, 2), spec_of(4, 5, {3, 1}, 2, 2),
  };
  for (const auto& spec : grid) {
    if (!zone_only_condition(spec)) {
      rows.push_back({spec.to_string(), "condition does not hold", false});
      continue;
    }
    const auto zone = mono_zone(spec).interval;
    rows.push_back(spectrum_equals(spec, range(zone.lo, zone.hi), o));
  }
  return rows;
}

std::vector<SuiteRow> uncolourable_suite(const SuiteOptions& o) {
  std::vector<SuiteRow> rows;
  for (const auto& spec : uncolourable_grid()) {
    if (!uncolourable_condition(spec)) {
      rows.push_back({spec.to_string(), "condition does not hold", false});
      continue;
    }
    auto row = spectrum_equals(spec, {}, o);
    if (spec.vertex_count() <= oracle::kBruteVertexLimit) {
      for (int k = 1; k <= spec.vertex_count(); ++k) {
        if (oracle::brute_oracle(spec, k)) {
          row.passed = false;
          row.detail += "; brute force finds k=" + std::to_string(k);
        }
      }
      row.detail += "; brute force agrees";
    }
    rows.push_back(row);
  }
  return rows;
}

std::vector<SuiteRow> nogaps_suite(const SuiteOptions& o) {
  std::vector<SuiteRow> rows;
  for (const auto& spec : nogap_grid(o.max_vertices)) {
    const auto result = spectrum(spec, {.k_max = std::nullopt, .node_budget = o.node_budget});
    const bool ok = result.complete && result.colourable && result.gaps.empty();
    rows.push_back({spec.to_string(), "spectrum " + join(result.feasible_k), ok});
  }
  return rows;
}

std::vector<SuiteRow> gaps_suite(const SuiteOptions& o) {
  std::vector<SuiteRow> rows;
  for (const auto& spec : gap_grid()) {
    const SearchLimits limits{o.node_budget};
    const auto at_beta = decide_k(spec, spec.beta, limits);
    const auto above = decide_k(spec, spec.beta + 1, limits);
    const bool constructed = is_valid(spec, beta_colouring(spec));
    const auto zone = mono_zone(spec);
    bool zone_ok = zone.status == ZoneStatus::exists && zone.interval.lo > spec.beta + 1;
    for (int k = zone.interval.lo; zone_ok && k <= zone.interval.hi; ++k) {
      zone_ok = decide_k(spec, k, limits).verdict == Verdict::feasible;
    }
    const bool ok = at_beta.verdict == Verdict::feasible && above.verdict == Verdict::infeasible && constructed &&
                    zone_ok;
    rows.push_back({spec.to_string(),
                    "k=beta " + to_string(at_beta.verdict) + ", k=beta+1 " + to_string(above.verdict) +
                        (constructed ? ", beta colouring valid" : ", beta colouring rejected") +
                        (zone_ok ? ", zone feasible above beta+1" : ", zone check failed"),
                    ok});
  }
  return rows;
}

std::vector<SuiteRow> appendix_suite(const SuiteOptions& o) {
  std::vector<SuiteRow> rows;
  const SearchLimits limits{o.node_budget};
  const auto big = spec_of(7, 6, {6, 6}, 3, 3);
  rows.push_back({"H(7,12,6|(6,6)) 3-colouring", "described colouring", is_valid(big, appendix_three_colouring(7))});
  rows.push_back({"H(7,12,6|(6,6)) 8-colouring", "described colouring",
                  is_valid(big, appendix_n_plus_one_colouring(7))});
  for (const auto& [k, want] : {std::pair{3, Verdict::feasible}, {4, Verdict::infeasible}, {8, Verdict::feasible}}) {
    const auto d = decide_k(big, k, limits);
    rows.push_back({"H(7,12,6|(6,6)) k=" + std::to_string(k), to_string(d.verdict), d.verdict == want});
  }
  const auto small = spec_of(5, 2, {2, 2}, 3, 3);
  rows.push_back({"H(5,4,2|(2,2)) 6-colouring", "described colouring", is_valid(small, appendix_pair_colouring(5))});
  rows.push_back(spectrum_equals(small, {6}, o));
  return rows;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"lemmas", "zone",  "zone-only", "uncolourable",
                                                 "nogaps", "gaps", "appendix"};
  return names;
}

std::optional<std::vector<SuiteRow>> run_suite(const std::string& name, const SuiteOptions& options) {
  if (name == "lemmas") return lemmas_suite();
  if (name == "zone") return zone_suite(options);
  if (name == "zone-only") return zone_only_suite(options);
  if (name == "uncolourable") return uncolourable_suite(options);
  if (name == "nogaps") return nogaps_suite(options);
  if (name == "gaps") return gaps_suite(options);
  if (name == "appendix") return appendix_suite(options);
  return std::nullopt;
}

bool all_passed(const std::vector<SuiteRow>& rows) {
  return std::all_of(rows.begin(), rows.end(), [](const SuiteRow& r) { return r.passed; });
}

nlohmann::json to_json(const std::vector<SuiteRow>& rows) {
  auto out = nlohmann::json::array();
  for (const auto& r : rows) out.push_back({{"name", r.name}, {"detail", r.detail}, {"passed", r.passed}});
  return out;
}

std::vector<HypergraphSpec> zone_grid(int max_n, int max_q) {
  std::vector<HypergraphSpec> out;
  for (int r = 2; r <= 6; ++r) {
    for (const auto& parts : oracle::partitions(r)) {
      const int s = static_cast<int>(parts.size());
      if (s < 2) continue;
      for (int alpha = 2; alpha <= s; ++alpha) {
        for (int beta = s; beta <= s + 1; ++beta) {
          for (int n = s; n <= max_n; ++n) {
            for (int q = parts.front(); q <= max_q; ++q) out.push_back(spec_of(n, q, parts, alpha, beta));
          }
        }
      }
    }
  }
  return out;
}

std::vector<HypergraphSpec> nogap_grid(int max_vertices) {
  std::vector<HypergraphSpec> out;
  for (int r = 2; r <= 5; ++r) {
    for (const auto& parts : oracle::partitions(r)) {
      const int s = static_cast<int>(parts.size());
      if (s < 2) continue;
      for (int beta = std::max(s, r - parts.back() + 1); beta <= r; ++beta) {
        for (int n = s; n <= 6; ++n) {
          for (int q = parts.front(); n * q <= max_vertices && q <= 4; ++q) {
            out.push_back(spec_of(n, q, parts, 2, beta));
          }
        }
      }
    }
  }
  return out;
}

std::vector<HypergraphSpec> uncolourable_grid() {
  return {spec_of(3, 4, {2, 2}, 3, 3),    spec_of(3, 7, {3, 1}, 3, 3),    spec_of(3, 7, {3, 2}, 3, 3),
          spec_of(3, 7, {3, 3}, 3, 3),    spec_of(7, 3, {2, 1, 1}, 2, 2), spec_of(7, 3, {2, 2, 1}, 2, 2),
          spec_of(5, 5, {2, 2, 2}, 4, 4)};
}

std::vector<HypergraphSpec> gap_grid() {
  std::vector<HypergraphSpec> out;
  const std::vector<std::tuple<std::vector<int>, int, int>> seeds = {
      {{2, 1}, 2, 2}, {{2, 2}, 2, 2}, {{3, 1}, 2, 2}, {{3, 2}, 2, 3}};
  for (const auto& [parts, alpha, beta] : seeds) {
    const auto sigma = Sigma::build(parts);
    const auto params = gap_instance_params(alpha, beta, sigma);
    if (!params) throw DomainError("no gap instance for " + sigma.to_string());
    out.push_back(HypergraphSpec::make(static_cast<int>(params->n_min), params->q, sigma, alpha, beta));
  }
  return out;
}

Colouring appendix_three_colouring(int n) {
  return Colouring(std::vector<std::vector<Colour>>(n, {0, 0, 1, 1, 2, 2}));
}

Colouring appendix_n_plus_one_colouring(int n) {
  std::vector<std::vector<Colour>> classes;
  for (int j = 0; j < n; ++j) classes.push_back({0, 0, 0, 0, 0, j + 1});
  return Colouring(std::move(classes));
}

Colouring appendix_pair_colouring(int n) {
  std::vector<std::vector<Colour>> classes;
  for (int j = 0; j < n; ++j) classes.push_back({0, j + 1});
  return Colouring(std::move(classes));
}

}  // namespace sigma_spectra
