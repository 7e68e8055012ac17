#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sigma_spectra/sigma.hpp"

namespace sigma_spectra {

/// The integer interval [lo, hi]; empty when lo > hi.
struct IntInterval {
  int lo = 1;
  int hi = 0;

  bool empty() const noexcept { return lo > hi; }
  bool contains(int k) const noexcept { return lo <= k && k <= hi; }
  int size() const noexcept { return empty() ? 0 : hi - lo + 1; }
  static IntInterval none() noexcept { return {1, 0}; }

  friend bool operator==(const IntInterval&, const IntInterval&) = default;
};

/// Classes per colour in an all-monochromatic colouring, non-increasing.
struct MonoDistribution {
  std::vector<int> counts;

  int colours() const noexcept { return static_cast<int>(counts.size()); }
  /// Sum of counts is n and the alpha-1 largest counts cover at most s-1 classes.
  bool is_valid_for(const HypergraphSpec& spec) const;
};

/// max sum of a non-increasing positive vector of length b whose a-1 largest
/// entries sum to at most d-1. Requires 2 <= a <= d and a <= b.
long long lemma_f(int a, int b, int d);

struct BminResult {
  long long formula = 0;  // closed-form value, unclamped
  long long value = 0;    // max(formula, a); meaningful only when feasible
  bool feasible = false;  // false when n < a: no vector of length >= a sums to n
};

/// Shortest such vector (length >= a) summing to exactly n. Requires 2 <= a <= d, n >= 1.
BminResult lemma_bmin(int a, int d, long long n);

enum class ZoneStatus { exists, none, unknown };

struct MonoZone {
  ZoneStatus status = ZoneStatus::unknown;
  IntInterval interval = IntInterval::none();
};

/// Colour counts achievable with every class monochromatic. Exists for
/// alpha <= s <= beta; none for s < alpha, and for s > beta at or above the
/// no_mono_zone_above threshold; unknown otherwise.
MonoZone mono_zone(const HypergraphSpec& spec);

/// Lower end of the zone formula; requires alpha <= s.
long long mono_zone_lower_bound(const HypergraphSpec& spec);

/// True when s > beta and n >= (beta-alpha+1) floor((s-1)/(alpha-1)) + s.
bool no_mono_zone_above(const HypergraphSpec& spec);

/// [zone lower bound, min(nq, n*m + beta - m*s)] with m = floor(beta/s);
/// nullopt unless alpha <= s <= beta.
std::optional<IntInterval> extended_interval(const HypergraphSpec& spec);

/// Delta >= 2, 2 <= alpha <= s = beta, n >= s^2, q >= (Delta-1) beta + 1.
bool zone_only_condition(const HypergraphSpec& spec);

/// Either threshold family that forces every colouring to contain an edge with
/// fewer than alpha or more than beta colours.
bool uncolourable_condition(const HypergraphSpec& spec);

struct GapParams {
  int q = 0;
  long long n_min = 0;

  friend bool operator==(const GapParams&, const GapParams&) = default;
};

/// q = (beta-alpha+1) floor((Delta-1)/(alpha-1)) + Delta - 1 and
/// n_min = C(beta+1, alpha-1)(s-1) + s. nullopt unless Delta >= alpha,
/// delta <= r - beta and alpha <= s <= beta. Throws DomainError if n_min
/// does not fit in 63 bits.
std::optional<GapParams> gap_instance_params(int alpha, int beta, const Sigma& sigma);

/// The gap-instance class size alone; requires Delta >= alpha.
int gap_instance_q(int alpha, int beta, const Sigma& sigma);

std::string to_string(ZoneStatus status);

}  // namespace sigma_spectra
