#include "sigma_spectra/oracles.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <set>

#include "sigma_spectra/errors.hpp"

namespace sigma_spectra::oracle {

long long lemma_f_exhaustive(int a, int b, int d) {
  long long best = -1;
  std::vector<int> x;
  std::function<void(int, int, int)> rec = [&](int pos, int cap, int head_sum) {
    if (pos == b) {
      best = std::max<long long>(best, std::accumulate(x.begin(), x.end(), 0LL));
      return;
    }
    for (int v = 1; v <= cap; ++v) {
      const int next_head = pos < a - 1 ? head_sum + v : head_sum;
      if (next_head > d - 1) break;
      x.push_back(v);
      rec(pos + 1, v, next_head);
      x.pop_back();
    }
  };
  rec(0, d - 1, 0);
  return best;
}

std::optional<int> lemma_bmin_exhaustive(int a, int d, int n) {
  std::optional<int> best;
  for (const auto& p : partitions(n)) {
    const int len = static_cast<int>(p.size());
    if (len < a) continue;
    if (std::accumulate(p.begin(), p.begin() + (a - 1), 0) > d - 1) continue;
    if (!best || len < *best) best = len;
  }
  return best;
}

std::vector<std::vector<int>> partitions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rest, int cap) {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int v = std::min(rest, cap); v >= 1; --v) {
      cur.push_back(v);
      rec(rest - v, v);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

std::vector<std::vector<int>> literal_edges(const HypergraphSpec& spec) {
  const int total = spec.vertex_count();
  const int r = spec.r();
  std::vector<std::vector<int>> edges;
  if (r > total) return edges;
  std::vector<int> pick(r);
  std::iota(pick.begin(), pick.end(), 0);
  const auto& target = spec.sigma.parts();
  while (true) {
    std::vector<int> per_class(spec.n, 0);
    for (int v : pick) ++per_class[v / spec.q];
    std::vector<int> nonzero;
    for (int c : per_class) {
      if (c > 0) nonzero.push_back(c);
    }
    std::sort(nonzero.begin(), nonzero.end(), std::greater<>());
    if (nonzero == target) edges.push_back(pick);
    int i = r - 1;
    while (i >= 0 && pick[i] == total - r + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < r; ++j) pick[j] = pick[j - 1] + 1;
  }
  return edges;
}

bool literal_is_valid(const HypergraphSpec& spec, const Colouring& colouring) {
  if (colouring.n() != spec.n || colouring.q() != spec.q) throw DimensionMismatch("colouring does not match spec");
  for (const auto& edge : literal_edges(spec)) {
    std::set<Colour> seen;
    for (int v : edge) seen.insert(colouring.class_colours(v / spec.q)[v % spec.q]);
    const int distinct = static_cast<int>(seen.size());
    if (distinct < spec.alpha || distinct > spec.beta) return false;
  }
  return true;
}

std::pair<int, int> literal_edge_colour_range(const std::vector<std::vector<Colour>>& classes,
                                              const std::vector<int>& parts) {
  int lo = std::numeric_limits<int>::max();
  int hi = 0;
  std::vector<Colour> chosen;
  std::function<void(std::size_t)> over_classes = [&](std::size_t j) {
    if (j == classes.size()) {
      const int d = static_cast<int>(std::set<Colour>(chosen.begin(), chosen.end()).size());
      lo = std::min(lo, d);
      hi = std::max(hi, d);
      return;
    }
    const auto& cls = classes[j];
    const int m = static_cast<int>(cls.size());
    const int a = parts[j];
    std::vector<bool> mask(m, false);
    std::fill(mask.begin(), mask.begin() + a, true);
    do {
      const auto before = chosen.size();
      for (int v = 0; v < m; ++v) {
        if (mask[v]) chosen.push_back(cls[v]);
      }
      over_classes(j + 1);
      chosen.resize(before);
    } while (std::prev_permutation(mask.begin(), mask.end()));
  };
  over_classes(0);
  return {lo, hi};
}

bool brute_oracle(const HypergraphSpec& spec, int k) {
  const int total = spec.vertex_count();
  if (total > kBruteVertexLimit) throw InstanceTooLarge("brute oracle needs n*q <= 12");
  if (k < 1 || k > total) return false;
  // edges bucketed by their largest vertex, checked once that vertex is coloured
  std::vector<std::vector<std::vector<int>>> closing(total);
  for (auto& e : literal_edges(spec)) closing[e.back()].push_back(std::move(e));
  std::vector<int> colour(total, -1);
  std::function<bool(int, int)> rec = [&](int v, int used) -> bool {
    if (v == total) return used == k;
    if (used + (total - v) < k) return false;
    const int top = std::min(used, k - 1);
    for (int c = 0; c <= top; ++c) {
      colour[v] = c;
      bool ok = true;
      for (const auto& e : closing[v]) {
        std::set<int> seen;
        for (int u : e) seen.insert(colour[u]);
        const int d = static_cast<int>(seen.size());
        if (d < spec.alpha || d > spec.beta) {
          ok = false;
          break;
        }
      }
      if (ok && rec(v + 1, std::max(used, c + 1))) return true;
    }
    colour[v] = -1;
    return false;
  };
  return rec(0, 0);
}

}  // namespace sigma_spectra::oracle
