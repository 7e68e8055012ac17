#include "sigma_spectra/closed_forms.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <limits>
#include <numeric>

#include "sigma_spectra/errors.hpp"

namespace sigma_spectra {

namespace {

long long floor_div(long long a, long long b) {
  long long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

long long ceil_div(long long a, long long b) { return -floor_div(-a, b); }

// n - (d-1 - (a-1) floor((d-1)/(a-1))) over floor((d-1)/(a-1)), rounded up
long long min_length_formula(long long a, long long d, long long n) {
  const long long per = (d - 1) / (a - 1);
  const long long slack = (d - 1) - (a - 1) * per;
  return ceil_div(n - slack, per);
}

}  // namespace

bool MonoDistribution::is_valid_for(const HypergraphSpec& spec) const {
  if (counts.empty()) return false;
  if (!std::is_sorted(counts.rbegin(), counts.rend())) return false;
  if (counts.back() < 1) return false;
  if (std::accumulate(counts.begin(), counts.end(), 0) != spec.n) return false;
  const auto top = std::min<std::size_t>(counts.size(), static_cast<std::size_t>(spec.alpha - 1));
  return std::accumulate(counts.begin(), counts.begin() + top, 0) <= spec.s() - 1;
}

long long lemma_f(int a, int b, int d) {
  if (a < 2 || a > d || b < a) throw DomainError("lemma_f requires 2 <= a <= d and a <= b");
  return static_cast<long long>(b - a + 1) * ((d - 1) / (a - 1)) + d - 1;
}

BminResult lemma_bmin(int a, int d, long long n) {
  if (a < 2 || a > d || n < 1) throw DomainError("lemma_bmin requires 2 <= a <= d and n >= 1");
  BminResult out;
  out.formula = min_length_formula(a, d, n);
  out.feasible = n >= a;
  out.value = std::max<long long>(out.formula, a);
  return out;
}

long long mono_zone_lower_bound(const HypergraphSpec& spec) {
  if (spec.alpha > spec.s()) throw DomainError("zone lower bound requires alpha <= s");
  return min_length_formula(spec.alpha, spec.s(), spec.n);
}

bool no_mono_zone_above(const HypergraphSpec& spec) {
  const int s = spec.s();
  if (s <= spec.beta) return false;
  const long long threshold = static_cast<long long>(spec.beta - spec.alpha + 1) * ((s - 1) / (spec.alpha - 1)) + s;
  return spec.n >= threshold;
}

MonoZone mono_zone(const HypergraphSpec& spec) {
  const int s = spec.s();
  if (s < spec.alpha) return {ZoneStatus::none, IntInterval::none()};
  if (s > spec.beta) {
    return {no_mono_zone_above(spec) ? ZoneStatus::none : ZoneStatus::unknown, IntInterval::none()};
  }
  const auto lo = mono_zone_lower_bound(spec);
  return {ZoneStatus::exists, IntInterval{static_cast<int>(lo), spec.n}};
}

std::optional<IntInterval> extended_interval(const HypergraphSpec& spec) {
  const int s = spec.s();
  if (spec.alpha > s || s > spec.beta) return std::nullopt;
  const long long per_class = spec.beta / s;
  const long long upper = std::min<long long>(static_cast<long long>(spec.n) * spec.q,
                                              spec.n * per_class + spec.beta - per_class * s);
  return IntInterval{static_cast<int>(mono_zone_lower_bound(spec)), static_cast<int>(upper)};
}

bool zone_only_condition(const HypergraphSpec& spec) {
  const int s = spec.s();
  const int big = spec.sigma.delta_max();
  return big >= 2 && spec.alpha >= 2 && spec.alpha <= s && s == spec.beta && spec.n >= s * s &&
         spec.q >= (big - 1) * spec.beta + 1;
}

bool uncolourable_condition(const HypergraphSpec& spec) {
  const int s = spec.s();
  const int r = spec.r();
  const int a = spec.alpha;
  const int b = spec.beta;
  const bool q_large = spec.q >= b * (spec.sigma.delta_max() - 1) + 1;
  const bool too_few_parts = s >= 1 && s < a && a <= b && b < r && q_large && spec.n >= 2 * s - 1;
  const bool too_many_parts = a > 1 && a <= b && b < s && s < r && q_large &&
                              spec.n >= ((s - 1) / (a - 1)) * (s - a) + 2 * s - 1;
  return too_few_parts || too_many_parts;
}

int gap_instance_q(int alpha, int beta, const Sigma& sigma) {
  const int big = sigma.delta_max();
  if (alpha < 2 || beta < alpha || big < alpha) {
    throw DomainError("gap instance class size requires 2 <= alpha <= beta and Delta >= alpha");
  }
  return (beta - alpha + 1) * ((big - 1) / (alpha - 1)) + big - 1;
}

std::optional<GapParams> gap_instance_params(int alpha, int beta, const Sigma& sigma) {
  const int s = sigma.s();
  if (alpha < 2 || beta < alpha) return std::nullopt;
  if (sigma.delta_max() < alpha || sigma.delta_min() > sigma.r() - beta || alpha > s || s > beta) {
    return std::nullopt;
  }
  using boost::multiprecision::cpp_int;
  cpp_int binom = 1;
  for (int i = 1; i <= alpha - 1; ++i) binom = binom * (beta + 1 - (alpha - 1) + i) / i;
  const cpp_int n_min = binom * (s - 1) + s;
  if (n_min > std::numeric_limits<long long>::max()) throw DomainError("gap instance n_min overflows 63 bits");
  return GapParams{gap_instance_q(alpha, beta, sigma), n_min.convert_to<long long>()};
}

std::string to_string(ZoneStatus status) {
  switch (status) {
    case ZoneStatus::exists: return "exists";
    case ZoneStatus::none: return "none";
    case ZoneStatus::unknown: return "unknown";
  }
  return "unknown";
}

}  // namespace sigma_spectra
