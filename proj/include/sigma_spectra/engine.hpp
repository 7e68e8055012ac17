#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sigma_spectra/closed_forms.hpp"
#include "sigma_spectra/colouring.hpp"
#include "sigma_spectra/sigma.hpp"

namespace sigma_spectra {

/// Colour counts above this are reported as unknown rather than searched.
inline constexpr int kMaxSearchColours = 128;

enum class Verdict { feasible, infeasible, unknown };

std::string to_string(Verdict v);

struct SearchLimits {
  std::uint64_t node_budget = 0;  // 0: unlimited
};

struct KDecision {
  int k = 0;
  Verdict verdict = Verdict::unknown;
  std::optional<Colouring> witness;  // canonical, present iff feasible
  std::uint64_t nodes = 0;
};

/// Exact decision for "is there an (alpha,beta)-colouring using exactly k
/// colours". Throws DomainError unless 1 <= k <= nq.
KDecision decide_k(const HypergraphSpec& spec, int k, const SearchLimits& limits = {});

/// decide_k without a budget; the witness is in canonical form.
std::optional<Colouring> k_colourable(const HypergraphSpec& spec, int k);

struct SpectrumOptions {
  std::optional<int> k_max;  // defaults to nq
  std::uint64_t node_budget = 0;
};

struct SpectrumResult {
  std::vector<int> feasible_k;
  std::vector<int> unknown_k;
  std::optional<int> chi;
  std::optional<int> chi_bar;
  std::vector<IntInterval> gaps;  // maximal runs strictly inside (chi, chi_bar) missing from feasible_k
  bool colourable = false;
  bool complete = true;  // false when some k hit the node budget
  int k_max = 0;
  std::vector<KDecision> decisions;  // one per k in [1, k_max], ascending

  bool is_feasible(int k) const;
};

/// Every k in [1, k_max], decided independently; k values are spread over
/// OpenMP threads. The result does not depend on the schedule.
SpectrumResult spectrum(const HypergraphSpec& spec, const SpectrumOptions& options = {});

/// Single-threaded reference for spectrum.
SpectrumResult spectrum_serial(const HypergraphSpec& spec, const SpectrumOptions& options = {});

/// Assembles chi, chi_bar, gaps and completeness from per-k decisions.
SpectrumResult summarize(std::vector<KDecision> decisions, int k_max);

/// Every k of the interval is feasible. Empty intervals hold vacuously.
bool verify_interval(const HypergraphSpec& spec, const IntInterval& interval, const SearchLimits& limits = {});

/// Literal-enumeration cross-check for k_colourable; n*q must be <= 12.
bool brute_oracle(const HypergraphSpec& spec, int k);

}  // namespace sigma_spectra
