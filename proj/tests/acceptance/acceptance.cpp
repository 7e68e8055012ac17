#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "sigma_spectra/closed_forms.hpp"
#include "sigma_spectra/constructions.hpp"
#include "sigma_spectra/engine.hpp"
#include "sigma_spectra/oracles.hpp"
#include "sigma_spectra/validator.hpp"

using namespace sigma_spectra;

namespace {

constexpr std::uint64_t kBudget = 200'000'000;

HypergraphSpec spec_of(int n, int q, std::vector<int> parts, int alpha, int beta) {
  return HypergraphSpec::make(n, q, Sigma::build(std::move(parts)), alpha, beta);
}

// Non-increasing positive vectors with max part <= cap, summing to n.
void each_partition(int n, int cap, std::vector<int>& cur, const std::function<void(const std::vector<int>&)>& f) {
  if (n == 0) {
    f(cur);
    return;
  }
  for (int p = std::min(n, cap); p >= 1; --p) {
    cur.push_back(p);
    each_partition(n - p, p, cur, f);
    cur.pop_back();
  }
}

std::vector<std::vector<int>> partitions_of(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  each_partition(n, n, cur, [&](const std::vector<int>& p) { out.push_back(p); });
  return out;
}

int head_sum(const std::vector<int>& x, int count) {
  int s = 0;
  for (int i = 0; i < count && i < static_cast<int>(x.size()); ++i) s += x[i];
  return s;
}

// max sum over non-increasing positive vectors of length b with head (a-1) sum <= d-1
long long f_enumerated(int a, int b, int d) {
  long long best = -1;
  std::vector<int> x;
  std::function<void(int)> go = [&](int cap) {
    const int len = static_cast<int>(x.size());
    if (len == b) {
      long long s = 0;
      for (int v : x) s += v;
      best = std::max(best, s);
      return;
    }
    for (int v = cap; v >= 1; --v) {
      if (len < a - 1 && head_sum(x, len) + v > d - 1) continue;
      x.push_back(v);
      go(v);
      x.pop_back();
    }
  };
  go(d - 1);
  return best;
}

std::optional<int> bmin_enumerated(int a, int d, int n) {
  std::optional<int> best;
  std::vector<int> cur;
  each_partition(n, d - 1, cur, [&](const std::vector<int>& p) {
    if (static_cast<int>(p.size()) < a || head_sum(p, a - 1) > d - 1) return;
    if (!best || static_cast<int>(p.size()) < *best) best = static_cast<int>(p.size());
  });
  return best;
}

Colouring all_mono(const std::vector<int>& counts, int q) {
  std::vector<std::vector<Colour>> classes;
  for (int c = 0; c < static_cast<int>(counts.size()); ++c) {
    for (int i = 0; i < counts[c]; ++i) classes.emplace_back(q, c);
  }
  return Colouring(std::move(classes));
}

struct Outcome {
  bool pass = false;
  std::string detail;
};

int failures = 0;

void report(int id, const std::string& title, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (!out.pass) ++failures;
  std::printf("criterion %d %s: %s (%s; %.2f s)\n", id, title.c_str(), out.pass ? "PASS" : "FAIL", out.detail.c_str(),
              secs);
  std::fflush(stdout);
}

Outcome lemma_grid() {
  int checks = 0;
  for (int a = 2; a <= 7; ++a) {
    for (int d = a; d <= 7; ++d) {
      for (int b = a; b <= 8; ++b) {
        ++checks;
        if (lemma_f(a, b, d) != f_enumerated(a, b, d)) {
          return {false, "lemma_f differs at a=" + std::to_string(a) + " b=" + std::to_string(b) +
                             " d=" + std::to_string(d)};
        }
      }
      for (int n = 1; n <= 40; ++n) {
        ++checks;
        const auto got = lemma_bmin(a, d, n);
        const auto want = bmin_enumerated(a, d, n);
        if (got.feasible != want.has_value() || (want && got.value != *want)) {
          return {false, "lemma_bmin differs at a=" + std::to_string(a) + " d=" + std::to_string(d) +
                             " n=" + std::to_string(n)};
        }
      }
    }
  }
  return {true, std::to_string(checks) + " exact comparisons"};
}

// With sigma=(q,q) every edge is the union of two whole classes.
bool whole_pairs_ok(const HypergraphSpec& spec, const Colouring& c) {
  for (int i = 0; i < c.n(); ++i) {
    for (int j = i + 1; j < c.n(); ++j) {
      std::set<Colour> u(c.class_colours(i).begin(), c.class_colours(i).end());
      u.insert(c.class_colours(j).begin(), c.class_colours(j).end());
      const int k = static_cast<int>(u.size());
      if (k < spec.alpha || k > spec.beta) return false;
    }
  }
  return true;
}

Outcome twelve_uniform_gap() {
  const auto spec = spec_of(7, 6, {6, 6}, 3, 3);
  std::string detail;
  bool ok = true;
  for (const auto& [k, want] : {std::pair{3, Verdict::feasible}, {4, Verdict::infeasible}, {8, Verdict::feasible}}) {
    const auto d = decide_k(spec, k, {kBudget});
    detail += "k=" + std::to_string(k) + " " + to_string(d.verdict) + " ";
    ok = ok && d.verdict == want;
    if (d.witness) ok = ok && whole_pairs_ok(spec, *d.witness) && d.witness->colour_count() == k;
  }
  return {ok, detail + "gap between 3 and 8"};
}

Outcome pair_classes_spectrum() {
  const auto spec = spec_of(5, 2, {2, 2}, 3, 3);
  const auto r = spectrum(spec, {.k_max = std::nullopt, .node_budget = kBudget});
  bool ok = r.complete && r.feasible_k == std::vector<int>{6};
  for (int k = 1; k <= spec.vertex_count(); ++k) ok = ok && oracle::brute_oracle(spec, k) == (k == 6);
  return {ok, "spectrum size " + std::to_string(r.feasible_k.size()) + ", brute force agrees"};
}

Outcome desk_gap_instance() {
  const auto params = gap_instance_params(2, 2, Sigma::build({2, 2}));
  if (!params || params->q != 2 || params->n_min != 5) return {false, "unexpected instance parameters"};
  const auto spec = spec_of(5, 2, {2, 2}, 2, 2);
  const auto r = spectrum(spec, {.k_max = std::nullopt, .node_budget = kBudget});
  const bool ok = r.complete && r.is_feasible(2) && r.is_feasible(5) && !r.is_feasible(3) && !r.is_feasible(4);
  std::string ks;
  for (int k : r.feasible_k) ks += std::to_string(k) + " ";
  return {ok, "feasible k: " + ks};
}

Outcome zone_law() {
  int specs = 0;
  for (int r = 2; r <= 6; ++r) {
    for (const auto& parts : partitions_of(r)) {
      const int s = static_cast<int>(parts.size());
      for (int alpha = 2; alpha <= s; ++alpha) {
        for (int beta = s; beta <= s + 1; ++beta) {
          for (int n = s; n <= 7; ++n) {
            for (int q = parts.front(); q <= 4; ++q) {
              const auto spec = spec_of(n, q, parts, alpha, beta);
              const auto zone = mono_zone(spec);
              if (zone.status != ZoneStatus::exists) return {false, spec.to_string() + " has no zone"};
              for (int k = zone.interval.lo; k <= zone.interval.hi; ++k) {
                const auto c = mono_colouring(spec, k);
                if (c.colour_count() != k || c.monochromatic_class_count() != n || !is_valid(spec, c)) {
                  return {false, spec.to_string() + " mono colouring k=" + std::to_string(k)};
                }
              }
              int least = n + 1;
              for (const auto& counts : partitions_of(n)) {
                if (is_valid(spec, all_mono(counts, q))) least = std::min(least, static_cast<int>(counts.size()));
              }
              if (least != zone.interval.lo) {
                return {false, spec.to_string() + " fewest monochromatic colours " + std::to_string(least)};
              }
              ++specs;
            }
          }
        }
      }
    }
  }
  return {specs >= 30, std::to_string(specs) + " specs"};
}

Outcome no_gap_law() {
  int specs = 0;
  for (int r = 2; r <= 5; ++r) {
    for (const auto& parts : partitions_of(r)) {
      const int s = static_cast<int>(parts.size());
      if (s < 2) continue;
      for (int beta = std::max(s, r - parts.back() + 1); beta <= r; ++beta) {
        for (int n = s; n <= 8; ++n) {
          for (int q = parts.front(); n * q <= 24; ++q) {
            const auto spec = spec_of(n, q, parts, 2, beta);
            const auto res = spectrum(spec, {.k_max = std::nullopt, .node_budget = kBudget});
            if (!res.complete) return {false, spec.to_string() + " hit the node budget"};
            if (!res.colourable || !res.gaps.empty()) return {false, spec.to_string() + " has a gap"};
            ++specs;
          }
        }
      }
    }
  }
  return {specs >= 20, std::to_string(specs) + " specs, all single intervals"};
}

Outcome oracle_equivalence() {
  int specs = 0;
  int decisions = 0;
  for (int r = 1; r <= 5; ++r) {
    for (const auto& parts : partitions_of(r)) {
      for (int alpha = 2; alpha <= std::max(2, r); ++alpha) {
        for (int beta = alpha; beta <= std::max(2, r); ++beta) {
          for (int n = 1; n <= 12; ++n) {
            for (int q = 1; n * q <= 12; ++q) {
              const auto spec = spec_of(n, q, parts, alpha, beta);
              for (int k = 1; k <= n * q; ++k) {
                const bool engine = k_colourable(spec, k).has_value();
                if (engine != oracle::brute_oracle(spec, k)) {
                  return {false, spec.to_string() + " k=" + std::to_string(k)};
                }
                ++decisions;
              }
              ++specs;
            }
          }
        }
      }
    }
  }
  return {specs >= 50, std::to_string(specs) + " specs, " + std::to_string(decisions) + " decisions"};
}

Outcome non_colourable() {
  const std::vector<HypergraphSpec> specs = {
      spec_of(3, 4, {2, 2}, 3, 3),    spec_of(3, 7, {3, 1}, 3, 3),    spec_of(3, 7, {3, 2}, 3, 3),
      spec_of(3, 7, {3, 3}, 3, 3),    spec_of(7, 3, {2, 1, 1}, 2, 2), spec_of(7, 3, {2, 2, 1}, 2, 2),
      spec_of(5, 5, {2, 2, 2}, 4, 4)};
  int brute = 0;
  for (const auto& spec : specs) {
    if (!uncolourable_condition(spec)) return {false, spec.to_string() + " misses the threshold"};
    // minimal: shrinking n or q breaks the threshold
    if (spec.n > 1 && uncolourable_condition(spec_of(spec.n - 1, spec.q, spec.sigma.parts(), spec.alpha, spec.beta))) {
      return {false, spec.to_string() + " n is not minimal"};
    }
    if (uncolourable_condition(spec_of(spec.n, spec.q - 1, spec.sigma.parts(), spec.alpha, spec.beta))) {
      return {false, spec.to_string() + " q is not minimal"};
    }
    const auto r = spectrum(spec, {.k_max = std::nullopt, .node_budget = kBudget});
    if (!r.complete || r.colourable) return {false, spec.to_string() + " engine reports a colouring"};
    if (spec.vertex_count() <= oracle::kBruteVertexLimit) {
      for (int k = 1; k <= spec.vertex_count(); ++k) {
        if (oracle::brute_oracle(spec, k)) return {false, spec.to_string() + " brute force finds a colouring"};
      }
      ++brute;
    }
  }
  return {true, std::to_string(specs.size()) + " specs, " + std::to_string(brute) + " cross-checked by brute force"};
}

Outcome recolouring_lemmas() {
  std::mt19937 rng(20240611);
  const std::vector<HypergraphSpec> specs = {spec_of(4, 3, {2, 2}, 2, 3), spec_of(5, 3, {2, 2}, 2, 3),
                                             spec_of(5, 3, {2, 1}, 2, 3), spec_of(4, 4, {3, 2}, 2, 4),
                                             spec_of(5, 3, {1, 1, 1}, 2, 3), spec_of(6, 2, {1, 1, 1}, 2, 4),
                                             spec_of(4, 3, {2, 2, 1}, 2, 5)};
  std::vector<std::pair<HypergraphSpec, Colouring>> pool;
  for (const auto& spec : specs) {
    if (spec.alpha != 2 || spec.sigma.delta_min() < spec.r() - spec.beta + 1 || spec.s() < 2) {
      return {false, spec.to_string() + " is outside the lemma hypotheses"};
    }
    for (const auto& d : spectrum(spec).decisions) {
      if (d.witness) pool.emplace_back(spec, *d.witness);
    }
  }
  int whole = 0, merge = 0, failed = 0;
  while (whole + merge < 1000) {
    auto [spec, c] = pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
    // random relabelling and class order
    std::vector<int> order(c.n());
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<Colour> rename(c.max_colour() + 1);
    std::iota(rename.begin(), rename.end(), 0);
    std::shuffle(rename.begin(), rename.end(), rng);
    std::vector<std::vector<Colour>> classes;
    for (int i : order) {
      classes.emplace_back();
      for (Colour x : c.class_colours(i)) classes.back().push_back(rename[x]);
    }
    const Colouring start(classes);
    const int i = std::uniform_int_distribution<int>(0, start.n() - 1)(rng);
    std::vector<Colour> priv;
    for (Colour x : start.class_colours(i)) {
      if (start.occurrences_outside(i, x) == 0 && (priv.empty() || priv.back() != x)) priv.push_back(x);
    }
    Colouring out;
    if (priv.size() >= 2 && rng() % 2 == 0) {
      std::shuffle(priv.begin(), priv.end(), rng);
      out = recolour_merge_two_unique(start, i, priv[0], priv[1]);
      ++merge;
      if (out.colour_count() != start.colour_count() - 1) ++failed;
    } else {
      out = recolour_whole_class(start, i);
      ++whole;
    }
    const bool ok = is_valid(spec, out) &&
                    (spec.vertex_count() > oracle::kBruteVertexLimit || oracle::literal_is_valid(spec, out));
    if (!ok) ++failed;
  }
  return {failed == 0, std::to_string(whole) + " whole-class and " + std::to_string(merge) + " merge applications, " +
                           std::to_string(failed) + " failures"};
}

}  // namespace

int main() {
  report(1, "lemma oracle grid", lemma_grid);
  report(2, "H(7,12,6|(6,6)) (3,3) gap", twelve_uniform_gap);
  report(3, "H(5,4,2|(2,2)) (3,3) spectrum", pair_classes_spectrum);
  report(4, "gap instance sigma=(2,2) alpha=beta=2", desk_gap_instance);
  report(5, "monochromatic zone law", zone_law);
  report(6, "no-gap law", no_gap_law);
  report(7, "engine equals brute force", oracle_equivalence);
  report(8, "non-colourability thresholds", non_colourable);
  report(9, "recolouring lemmas", recolouring_lemmas);
  std::printf("%s: %d of 9 criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
