#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "sigma_spectra/colouring.hpp"
#include "sigma_spectra/sigma.hpp"

namespace sigma_spectra {

struct SuiteRow {
  std::string name;
  std::string detail;
  bool passed = false;
};

struct SuiteOptions {
  int max_n = 7;          // zone grid
  int max_q = 4;          // zone grid
  int max_vertices = 24;  // nogaps grid, n*q bound
  std::uint64_t node_budget = 0;
};

/// lemmas, zone, zone-only, uncolourable, nogaps, gaps, appendix
const std::vector<std::string>& suite_names();

/// nullopt for an unknown suite name.
std::optional<std::vector<SuiteRow>> run_suite(const std::string& name, const SuiteOptions& options = {});

bool all_passed(const std::vector<SuiteRow>& rows);
nlohmann::json to_json(const std::vector<SuiteRow>& rows);

/// Grids the suites run over, exposed for tests.
std::vector<HypergraphSpec> zone_grid(int max_n, int max_q);
std::vector<HypergraphSpec> nogap_grid(int max_vertices);
std::vector<HypergraphSpec> uncolourable_grid();
std::vector<HypergraphSpec> gap_grid();

/// The colourings described for the two appendix examples.
Colouring appendix_three_colouring(int n);       // H(n,12,6|(6,6)): each colour twice per class
Colouring appendix_n_plus_one_colouring(int n);  // H(n,12,6|(6,6)): five shared, one private per class
Colouring appendix_pair_colouring(int n);        // H(n,4,2|(2,2)): colours 0 and j in class j

}  // namespace sigma_spectra
