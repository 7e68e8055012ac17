#include "sigma_spectra/validator.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <limits>
#include <set>

#include "sigma_spectra/errors.hpp"

namespace sigma_spectra {

namespace {

void check_shape(std::span<const ClassProfile> profiles, std::span<const int> parts) {
  if (profiles.size() != parts.size()) throw DimensionMismatch("profiles and parts differ in length");
  if (profiles.empty()) throw DimensionMismatch("an edge shape needs at least one class");
  for (std::size_t j = 0; j < parts.size(); ++j) {
    if (parts[j] < 1) throw InfeasibleShape("part sizes must be positive");
    if (parts[j] > profiles[j].total) throw InfeasibleShape("part larger than its class");
  }
}

std::vector<Colour> colour_union(std::span<const ClassProfile> profiles) {
  std::set<Colour> all;
  for (const auto& p : profiles) {
    for (const auto& [c, m] : p.counts) all.insert(c);
  }
  return {all.begin(), all.end()};
}

bool covers(std::span<const ClassProfile> profiles, std::span<const int> parts, const std::vector<Colour>& t) {
  for (std::size_t j = 0; j < profiles.size(); ++j) {
    int got = 0;
    for (Colour c : t) {
      auto it = profiles[j].counts.find(c);
      if (it != profiles[j].counts.end()) got += it->second;
    }
    if (got < parts[j]) return false;
  }
  return true;
}

// Smallest covering colour set, searched by increasing size.
std::vector<Colour> min_cover(std::span<const ClassProfile> profiles, std::span<const int> parts) {
  const auto colours = colour_union(profiles);
  const int m = static_cast<int>(colours.size());
  for (int size = 1; size <= m; ++size) {
    std::vector<int> pick(size);
    for (int i = 0; i < size; ++i) pick[i] = i;
    while (true) {
      std::vector<Colour> t;
      for (int i : pick) t.push_back(colours[i]);
      if (covers(profiles, parts, t)) return t;
      int i = size - 1;
      while (i >= 0 && pick[i] == m - size + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return colours;  // unreachable when every part fits its class
}

// Max b-matching between classes (capacity parts[j]) and colours (capacity 1),
// by augmenting paths. Returns the colours matched to each class.
std::vector<std::vector<Colour>> max_transversal(std::span<const ClassProfile> profiles, std::span<const int> parts) {
  const auto colours = colour_union(profiles);
  const int m = static_cast<int>(colours.size());
  const int s = static_cast<int>(profiles.size());
  std::vector<int> owner(m, -1);
  std::vector<int> load(s, 0);
  auto has = [&](int j, int ci) { return profiles[j].counts.count(colours[ci]) > 0; };

  std::vector<bool> seen;
  // tries to give class j one more colour, re-routing other classes if needed
  std::function<bool(int)> augment = [&](int j) -> bool {
    for (int ci = 0; ci < m; ++ci) {
      if (!has(j, ci) || seen[ci]) continue;
      seen[ci] = true;
      if (owner[ci] < 0 || augment(owner[ci])) {
        owner[ci] = j;
        return true;
      }
    }
    return false;
  };
  for (int j = 0; j < s; ++j) {
    while (load[j] < parts[j]) {
      seen.assign(m, false);
      if (!augment(j)) break;
      ++load[j];
    }
  }
  std::vector<std::vector<Colour>> out(s);
  for (int ci = 0; ci < m; ++ci) {
    if (owner[ci] >= 0) out[owner[ci]].push_back(colours[ci]);
  }
  return out;
}

// Draws parts[j] vertices from class j, preferring `preferred` colours in order.
std::map<Colour, int> draw(const ClassProfile& profile, int part, const std::vector<Colour>& preferred,
                           bool one_each_first) {
  std::map<Colour, int> chosen;
  std::map<Colour, int> left = profile.counts;
  int need = part;
  if (one_each_first) {
    for (Colour c : preferred) {
      if (need == 0) break;
      if (left[c] > 0) {
        ++chosen[c];
        --left[c];
        --need;
      }
    }
  }
  for (Colour c : preferred) {
    const int take = std::min(need, left[c]);
    if (take > 0) {
      chosen[c] += take;
      left[c] -= take;
      need -= take;
    }
  }
  for (auto& [c, m] : left) {
    const int take = std::min(need, m);
    if (take > 0) {
      chosen[c] += take;
      m -= take;
      need -= take;
    }
  }
  return chosen;
}

std::vector<ClassProfile> all_profiles(const HypergraphSpec& spec, const Colouring& colouring) {
  if (colouring.n() != spec.n || colouring.q() != spec.q) {
    throw DimensionMismatch("colouring is " + std::to_string(colouring.n()) + "x" + std::to_string(colouring.q()) +
                            ", spec needs " + std::to_string(spec.n) + "x" + std::to_string(spec.q));
  }
  std::vector<ClassProfile> out;
  out.reserve(spec.n);
  for (int i = 0; i < spec.n; ++i) out.push_back(profile_of(colouring, i));
  return out;
}

std::vector<ClassProfile> gather(const std::vector<ClassProfile>& profiles, const EdgeShape& shape) {
  std::vector<ClassProfile> out;
  out.reserve(shape.classes.size());
  for (int c : shape.classes) out.push_back(profiles[c]);
  return out;
}

bool shape_ok(const HypergraphSpec& spec, const std::vector<ClassProfile>& profiles, const EdgeShape& shape) {
  const auto range = edge_colour_range(gather(profiles, shape), shape.parts);
  return range.min_distinct >= spec.alpha && range.max_distinct <= spec.beta;
}

}  // namespace

ColourRange edge_colour_range(std::span<const ClassProfile> profiles, std::span<const int> parts) {
  check_shape(profiles, parts);
  const int lo = static_cast<int>(min_cover(profiles, parts).size());
  int hi = 0;
  for (const auto& matched : max_transversal(profiles, parts)) hi += static_cast<int>(matched.size());
  return {lo, hi};
}

bool is_valid_serial(const HypergraphSpec& spec, const Colouring& colouring) {
  const auto profiles = all_profiles(spec, colouring);
  for (const auto& shape : edge_shapes(spec)) {
    if (!shape_ok(spec, profiles, shape)) return false;
  }
  return true;
}

bool is_valid(const HypergraphSpec& spec, const Colouring& colouring) {
  const auto profiles = all_profiles(spec, colouring);
  const auto shapes = edge_shapes(spec);
  const auto count = static_cast<long long>(shapes.size());
  std::atomic<bool> bad{false};
#pragma omp parallel for schedule(dynamic, 8)
  for (long long i = 0; i < count; ++i) {
    if (bad.load(std::memory_order_relaxed)) continue;
    if (!shape_ok(spec, profiles, shapes[i])) bad.store(true, std::memory_order_relaxed);
  }
  return !bad.load();
}

std::optional<EdgeWitness> find_violation(const HypergraphSpec& spec, const Colouring& colouring) {
  const auto profiles = all_profiles(spec, colouring);
  for (const auto& shape : edge_shapes(spec)) {
    const auto local = gather(profiles, shape);
    const auto range = edge_colour_range(local, shape.parts);
    if (range.min_distinct >= spec.alpha && range.max_distinct <= spec.beta) continue;

    EdgeWitness w;
    w.class_tuple = shape.classes;
    w.part_assignment = shape.parts;
    if (range.min_distinct < spec.alpha) {
      const auto t = min_cover(local, shape.parts);
      for (std::size_t j = 0; j < local.size(); ++j) w.per_class_choice.push_back(draw(local[j], shape.parts[j], t, false));
    } else {
      const auto matched = max_transversal(local, shape.parts);
      for (std::size_t j = 0; j < local.size(); ++j) {
        w.per_class_choice.push_back(draw(local[j], shape.parts[j], matched[j], true));
      }
    }
    std::set<Colour> u;
    for (const auto& choice : w.per_class_choice) {
      for (const auto& [c, m] : choice) u.insert(c);
    }
    w.distinct_colours = static_cast<int>(u.size());
    return w;
  }
  return std::nullopt;
}

}  // namespace sigma_spectra
