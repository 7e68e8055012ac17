#include "sigma_spectra/engine.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <functional>
#include <limits>
#include <numeric>

#include "sigma_spectra/errors.hpp"
#include "sigma_spectra/oracles.hpp"

namespace sigma_spectra {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::feasible: return "feasible";
    case Verdict::infeasible: return "infeasible";
    case Verdict::unknown: return "unknown";
  }
  return "unknown";
}

bool SpectrumResult::is_feasible(int k) const {
  return std::binary_search(feasible_k.begin(), feasible_k.end(), k);
}

namespace {

struct ColourSet {
  std::array<std::uint64_t, 2> w{0, 0};

  void set(int c) { w[c >> 6] |= std::uint64_t{1} << (c & 63); }
  void reset(int c) { w[c >> 6] &= ~(std::uint64_t{1} << (c & 63)); }
  bool test(int c) const { return (w[c >> 6] >> (c & 63)) & 1U; }
  int count() const { return std::popcount(w[0]) + std::popcount(w[1]); }
  ColourSet& operator|=(const ColourSet& o) {
    w[0] |= o.w[0];
    w[1] |= o.w[1];
    return *this;
  }
  template <class F>
  void for_each(F&& f) const {
    for (int b = 0; b < 2; ++b) {
      for (std::uint64_t x = w[b]; x != 0; x &= x - 1) f(b * 64 + std::countr_zero(x));
    }
  }
};

static_assert(kMaxSearchColours <= 128);

// All (size)-subsets of [0, limit), lexicographic.
std::vector<std::vector<int>> combinations(int limit, int size) {
  std::vector<std::vector<int>> out;
  if (size < 0 || size > limit) return out;
  std::vector<int> pick(size);
  std::iota(pick.begin(), pick.end(), 0);
  while (true) {
    out.push_back(pick);
    int i = size - 1;
    while (i >= 0 && pick[i] == limit - size + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
  }
  return out;
}

// Partitions of q in descending lexicographic order.
std::vector<std::vector<int>> class_shapes(int q, int max_parts) {
  auto all = oracle::partitions(q);
  std::vector<std::vector<int>> out;
  for (auto& p : all) {
    if (static_cast<int>(p.size()) <= max_parts) out.push_back(std::move(p));
  }
  return out;
}

// Depth-first search for a colouring with exactly k colours.
//
// Classes are filled in index order. Each class first picks its shape (the
// multiplicities of its colours, non-increasing); shapes are non-increasing
// from class to class. Then every slot of the shape gets a colour: a colour
// already used by an earlier class, or the next unused index. Within a run of
// equal multiplicities colours increase. Together these fix one
// representative per orbit of class permutations and colour renamings.
//
// After each slot the edge shapes pairing the current class with earlier
// complete classes are checked. Both failure modes are monotone as slots are
// added, so a partial violation is final:
//   * too many colours: the best selection only depends on the colour supports
//     (class j offers up to parts[j] of its colours), evaluated by the min-cut
//     of the class/colour b-matching;
//   * too few colours: some set T of at most alpha-1 colours carries at least
//     parts[j] vertices in every class j of the tuple.
class KSearch {
 public:
  KSearch(const HypergraphSpec& spec, int k, std::uint64_t budget)
      : spec_(spec), k_(k), n_(spec.n), q_(spec.q), s_(spec.s()), budget_(budget) {
    edges_ = spec.has_edges();
    shapes_ = class_shapes(q_, k_);
    const auto& parts = spec.sigma.parts();
    for (int a : parts) {
      if (part_values_.empty() || part_values_.back() != a) part_values_.push_back(a);
    }
    for (int a : part_values_) {
      std::vector<int> rest(parts.begin(), parts.end());
      rest.erase(std::find(rest.begin(), rest.end(), a));
      rest_orders_.push_back(rest.empty() ? std::vector<std::vector<int>>{{}} : distinct_part_orders(rest));
    }
    check_beta_ = spec.r() > spec.beta;
    if (edges_) {
      for (int j = 0; j < n_; ++j) {
        partners_.push_back(combinations(j, s_ - 1));
        partners_short_.push_back(s_ >= 2 ? combinations(j, s_ - 2) : std::vector<std::vector<int>>{});
      }
    }
    mult_.assign(static_cast<std::size_t>(n_) * k_, 0);
    supp_.assign(n_, ColourSet{});
    class_shape_.assign(n_, -1);
    slot_colour_.assign(n_, std::vector<int>(q_, -1));
    best_match_.assign(n_ + 1, std::vector<int>(part_values_.size(), kNoTuple));
    if (edges_ && s_ == 1) {
      for (auto& v : best_match_[0]) v = 0;
    }
  }

  Verdict run() {
    if (descend_class(0)) return Verdict::feasible;
    return aborted_ ? Verdict::unknown : Verdict::infeasible;
  }

  std::uint64_t nodes() const { return nodes_; }

  Colouring witness() const {
    std::vector<std::vector<Colour>> classes(n_);
    for (int j = 0; j < n_; ++j) {
      const auto& shape = shapes_[class_shape_[j]];
      for (std::size_t t = 0; t < shape.size(); ++t) classes[j].insert(classes[j].end(), shape[t], slot_colour_[j][t]);
    }
    return Colouring(std::move(classes));
  }

 private:
  static constexpr int kNoTuple = std::numeric_limits<int>::min();

  std::size_t at(int cls, int c) const { return static_cast<std::size_t>(cls) * k_ + c; }

  // Most new colours a class at or after `level` may introduce.
  int new_colour_cap(int level) const {
    int cap = std::min(q_, k_);
    for (std::size_t vi = 0; vi < part_values_.size(); ++vi) {
      const int m = best_match_[level][vi];
      if (m == kNoTuple) continue;
      const int room = spec_.beta - m;
      if (room < part_values_[vi]) cap = std::min(cap, std::max(room, 0));
    }
    return cap;
  }

  bool descend_class(int j) {
    if (j == n_) return used_ == k_;
    const int cap = new_colour_cap(j);
    const int first = j == 0 ? 0 : class_shape_[j - 1];
    for (int si = first; si < static_cast<int>(shapes_.size()); ++si) {
      const int slots = static_cast<int>(shapes_[si].size());
      if (used_ + std::min(slots, cap) + (n_ - j - 1) * cap < k_) continue;
      class_shape_[j] = si;
      if (descend_slot(j, 0, 0, cap)) return true;
      if (aborted_) return false;
    }
    class_shape_[j] = -1;
    return false;
  }

  bool descend_slot(int j, int t, int fresh_here, int cap) {
    const auto& shape = shapes_[class_shape_[j]];
    const int slots = static_cast<int>(shape.size());
    if (t == slots) {
      close_class(j);
      return descend_class(j + 1);
    }
    const int m = shape[t];
    const int lowest = (t > 0 && shape[t - 1] == m) ? slot_colour_[j][t - 1] + 1 : 0;
    const int top = std::min(used_, k_ - 1);
    for (int c = lowest; c <= top; ++c) {
      if (supp_[j].test(c)) continue;
      const bool fresh = c == used_;
      if (fresh && fresh_here >= cap) break;
      const int fresh_after = fresh_here + (fresh ? 1 : 0);
      const int reach = std::min(slots - t - 1, cap - fresh_after) + (n_ - j - 1) * cap;
      if (used_ + (fresh ? 1 : 0) + std::max(reach, 0) < k_) continue;

      if (budget_ != 0 && nodes_ >= budget_) {
        aborted_ = true;
        return false;
      }
      ++nodes_;
      place(j, t, c, m, fresh);
      const bool ok = !edges_ || consistent(j, c);
      if (ok && descend_slot(j, t + 1, fresh_after, cap)) return true;
      unplace(j, t, c, m, fresh);
      if (aborted_) return false;
    }
    return false;
  }

  void place(int j, int t, int c, int m, bool fresh) {
    slot_colour_[j][t] = c;
    mult_[at(j, c)] = m;
    supp_[j].set(c);
    if (fresh) ++used_;
  }

  void unplace(int j, int t, int c, int m, bool fresh) {
    (void)m;
    slot_colour_[j][t] = -1;
    mult_[at(j, c)] = 0;
    supp_[j].reset(c);
    if (fresh) --used_;
  }

  // Max distinct colours over the tuple: min over subsets J of
  // (sum of parts outside J) + |union of supports inside J|.
  int transversal(const int* classes, const int* parts, int len) const {
    int best = std::numeric_limits<int>::max();
    for (int mask = 0; mask < (1 << len); ++mask) {
      int value = 0;
      ColourSet u;
      for (int i = 0; i < len; ++i) {
        if (mask >> i & 1) {
          u |= supp_[classes[i]];
        } else {
          value += parts[i];
        }
      }
      best = std::min(best, value + u.count());
    }
    return best;
  }

  bool covered(const int* classes, const int* parts, int len, const int* t, int tlen) const {
    for (int i = 0; i < len; ++i) {
      int got = 0;
      for (int x = 0; x < tlen; ++x) got += mult_[at(classes[i], t[x])];
      if (got < parts[i]) return false;
    }
    return true;
  }

  // Some T containing c, |T| <= alpha-1, fills every part of the tuple.
  bool too_few(const int* classes, const int* parts, int len, int c) const {
    std::array<int, 64> t{};
    t[0] = c;
    if (covered(classes, parts, len, t.data(), 1)) return true;
    const int extra = spec_.alpha - 2;
    if (extra <= 0) return false;
    ColourSet pool;
    for (int i = 0; i < len; ++i) pool |= supp_[classes[i]];
    pool.reset(c);
    std::vector<int> cand;
    pool.for_each([&](int x) { cand.push_back(x); });
    std::function<bool(std::size_t, int)> grow = [&](std::size_t from, int size) -> bool {
      for (std::size_t i = from; i < cand.size(); ++i) {
        t[size] = cand[i];
        if (covered(classes, parts, len, t.data(), size + 1)) return true;
        if (size < extra && size + 1 < static_cast<int>(t.size()) && grow(i + 1, size + 1)) return true;
      }
      return false;
    };
    return grow(0, 1);
  }

  // Checks every shape that places class j with s-1 earlier classes.
  bool consistent(int j, int c) const {
    std::array<int, 64> cls{};
    std::array<int, 64> parts{};
    for (const auto& partners : partners_[j]) {
      for (int i = 0; i < s_ - 1; ++i) cls[i] = partners[i];
      cls[s_ - 1] = j;
      for (std::size_t vi = 0; vi < part_values_.size(); ++vi) {
        parts[s_ - 1] = part_values_[vi];
        for (const auto& order : rest_orders_[vi]) {
          for (int i = 0; i < s_ - 1; ++i) parts[i] = order[i];
          if (check_beta_ && transversal(cls.data(), parts.data(), s_) > spec_.beta) return false;
          if (too_few(cls.data(), parts.data(), s_, c)) return false;
        }
      }
    }
    return true;
  }

  // Records the best transversal over s-1 complete classes for each part value
  // left to a further class.
  void close_class(int j) {
    auto& next = best_match_[j + 1];
    next = best_match_[j];
    if (!edges_ || s_ < 2) return;
    std::array<int, 64> cls{};
    for (const auto& partners : partners_short_[j]) {
      for (int i = 0; i < s_ - 2; ++i) cls[i] = partners[i];
      cls[s_ - 2] = j;
      for (std::size_t vi = 0; vi < part_values_.size(); ++vi) {
        for (const auto& order : rest_orders_[vi]) {
          next[vi] = std::max(next[vi], transversal(cls.data(), order.data(), s_ - 1));
        }
      }
    }
  }

  const HypergraphSpec& spec_;
  int k_;
  int n_;
  int q_;
  int s_;
  std::uint64_t budget_;
  bool edges_ = false;
  bool check_beta_ = true;
  std::vector<std::vector<int>> shapes_;
  std::vector<int> part_values_;
  std::vector<std::vector<std::vector<int>>> rest_orders_;
  std::vector<std::vector<std::vector<int>>> partners_;
  std::vector<std::vector<std::vector<int>>> partners_short_;

  std::vector<int> mult_;
  std::vector<ColourSet> supp_;
  std::vector<int> class_shape_;
  std::vector<std::vector<int>> slot_colour_;
  std::vector<std::vector<int>> best_match_;
  int used_ = 0;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
};

}  // namespace

KDecision decide_k(const HypergraphSpec& spec, int k, const SearchLimits& limits) {
  if (k < 1 || k > spec.vertex_count()) {
    throw DomainError("k must lie in [1, " + std::to_string(spec.vertex_count()) + "], got " + std::to_string(k));
  }
  if (spec.has_edges() && spec.s() > 20) throw DomainError("partitions with more than 20 parts are not supported");
  if (spec.alpha > 64) throw DomainError("alpha above 64 is not supported");
  KDecision d;
  d.k = k;
  if (k > kMaxSearchColours) return d;  // unknown
  KSearch search(spec, k, limits.node_budget);
  d.verdict = search.run();
  d.nodes = search.nodes();
  if (d.verdict == Verdict::feasible) d.witness = search.witness().canonical();
  return d;
}

std::optional<Colouring> k_colourable(const HypergraphSpec& spec, int k) { return decide_k(spec, k).witness; }

SpectrumResult summarize(std::vector<KDecision> decisions, int k_max) {
  SpectrumResult out;
  out.k_max = k_max;
  for (const auto& d : decisions) {
    if (d.verdict == Verdict::feasible) out.feasible_k.push_back(d.k);
    if (d.verdict == Verdict::unknown) out.unknown_k.push_back(d.k);
  }
  out.complete = out.unknown_k.empty();
  out.colourable = !out.feasible_k.empty();
  if (out.colourable) {
    out.chi = out.feasible_k.front();
    out.chi_bar = out.feasible_k.back();
    for (std::size_t i = 1; i < out.feasible_k.size(); ++i) {
      if (out.feasible_k[i] > out.feasible_k[i - 1] + 1) {
        out.gaps.push_back(IntInterval{out.feasible_k[i - 1] + 1, out.feasible_k[i] - 1});
      }
    }
  }
  out.decisions = std::move(decisions);
  return out;
}

namespace {

int resolve_k_max(const HypergraphSpec& spec, const SpectrumOptions& options) {
  const int total = spec.vertex_count();
  if (!options.k_max) return total;
  return std::clamp(*options.k_max, 0, total);
}

}  // namespace

SpectrumResult spectrum_serial(const HypergraphSpec& spec, const SpectrumOptions& options) {
  const int k_max = resolve_k_max(spec, options);
  std::vector<KDecision> decisions;
  for (int k = 1; k <= k_max; ++k) decisions.push_back(decide_k(spec, k, {options.node_budget}));
  return summarize(std::move(decisions), k_max);
}

SpectrumResult spectrum(const HypergraphSpec& spec, const SpectrumOptions& options) {
  const int k_max = resolve_k_max(spec, options);
  std::vector<KDecision> decisions(k_max);
#pragma omp parallel for schedule(dynamic, 1)
  for (int k = 1; k <= k_max; ++k) decisions[k - 1] = decide_k(spec, k, {options.node_budget});
  return summarize(std::move(decisions), k_max);
}

bool verify_interval(const HypergraphSpec& spec, const IntInterval& interval, const SearchLimits& limits) {
  for (int k = interval.lo; k <= interval.hi; ++k) {
    if (k < 1 || k > spec.vertex_count()) return false;
    if (decide_k(spec, k, limits).verdict != Verdict::feasible) return false;
  }
  return true;
}

bool brute_oracle(const HypergraphSpec& spec, int k) { return oracle::brute_oracle(spec, k); }

}  // namespace sigma_spectra
