#include "sigma_spectra/constructions.hpp"

#include <algorithm>
#include <set>

#include "sigma_spectra/errors.hpp"
#include "sigma_spectra/validator.hpp"

namespace sigma_spectra {

std::string to_string(RecolourKind kind) {
  switch (kind) {
    case RecolourKind::whole_class_to_new: return "whole-class-to-new";
    case RecolourKind::merge_two_unique_to_new: return "merge-two-unique-to-new";
    case RecolourKind::split_to_fixed: return "split-to-fixed";
  }
  return "whole-class-to-new";
}

MonoDistribution mono_distribution(const HypergraphSpec& spec, int k) {
  const auto zone = mono_zone(spec);
  if (zone.status != ZoneStatus::exists || !zone.interval.contains(k)) {
    throw Infeasible("k=" + std::to_string(k) + " is outside the monochromatic zone of " + spec.to_string());
  }
  const int s = spec.s();
  const int per = (s - 1) / (spec.alpha - 1);
  const int wide = (s - 1) - (spec.alpha - 1) * per;
  MonoDistribution dist;
  dist.counts.assign(k, 1);
  int extra = spec.n - k;
  for (int i = 0; i < k && extra > 0; ++i) {
    const int cap = i < wide ? per + 1 : per;
    const int add = std::min(extra, cap - 1);
    dist.counts[i] += add;
    extra -= add;
  }
  if (extra > 0) throw Infeasible("monochromatic distribution does not fit k=" + std::to_string(k));
  return dist;
}

Colouring mono_colouring(const HypergraphSpec& spec, int k) {
  const auto dist = mono_distribution(spec, k);
  std::vector<std::vector<Colour>> classes;
  classes.reserve(spec.n);
  for (int colour = 0; colour < dist.colours(); ++colour) {
    for (int i = 0; i < dist.counts[colour]; ++i) classes.emplace_back(spec.q, colour);
  }
  return Colouring(std::move(classes));
}

Colouring layered_colouring(const HypergraphSpec& spec, int k_target) {
  const int s = spec.s();
  if (spec.alpha > s || s > spec.beta) throw DomainError("layered colouring requires alpha <= s <= beta");
  const int m = spec.beta / s;
  const int lo = spec.n * m;
  const int hi = lo + spec.beta - m * s;
  if (k_target < lo || k_target > hi) {
    throw Infeasible("k_target=" + std::to_string(k_target) + " outside [" + std::to_string(lo) + ", " +
                     std::to_string(hi) + "]");
  }
  if (spec.q < m) throw Infeasible("classes are smaller than the palette size");

  std::vector<std::vector<Colour>> classes(spec.n);
  for (int j = 0; j < spec.n; ++j) {
    for (int v = 0; v < spec.q; ++v) classes[j].push_back(j * m + v % m);
  }
  // fresh singletons, round robin over classes; a palette colour keeps a vertex
  Colour fresh = lo;
  int pending = k_target - lo;
  while (pending > 0) {
    bool placed = false;
    for (int j = 0; j < spec.n && pending > 0; ++j) {
      std::map<Colour, int> counts;
      for (Colour c : classes[j]) {
        if (c < lo) ++counts[c];
      }
      auto donor = std::max_element(counts.begin(), counts.end(),
                                    [](const auto& a, const auto& b) { return a.second < b.second; });
      if (donor == counts.end() || donor->second < 2) continue;
      *std::find(classes[j].begin(), classes[j].end(), donor->first) = fresh++;
      --pending;
      placed = true;
    }
    if (!placed) throw Infeasible("not enough spare vertices for the fresh colours");
  }
  return Colouring(std::move(classes));
}

Colouring beta_colouring(const HypergraphSpec& spec) {
  const int q = gap_instance_q(spec.alpha, spec.beta, spec.sigma);
  if (spec.q != q) {
    throw DomainError("beta colouring needs q = " + std::to_string(q) + ", spec has q = " + std::to_string(spec.q));
  }
  const int big = spec.sigma.delta_max();
  const int per = (big - 1) / (spec.alpha - 1);
  const int heavy = (big - 1) - (spec.alpha - 1) * per;
  std::vector<Colour> cls;
  for (Colour c = 0; c < spec.beta; ++c) cls.insert(cls.end(), c < heavy ? per + 1 : per, c);
  return Colouring(std::vector<std::vector<Colour>>(spec.n, cls));
}

namespace {

void check_class(const Colouring& colouring, int class_index) {
  if (class_index < 0 || class_index >= colouring.n()) {
    throw IndexOutOfRange("class index " + std::to_string(class_index) + " out of range");
  }
}

bool in_class(const Colouring& colouring, int class_index, Colour c) {
  const auto& cls = colouring.class_colours(class_index);
  return std::binary_search(cls.begin(), cls.end(), c);
}

}  // namespace

Colouring recolour_whole_class(const Colouring& colouring, int class_index) {
  check_class(colouring, class_index);
  auto classes = colouring.classes();
  std::fill(classes[class_index].begin(), classes[class_index].end(), colouring.max_colour() + 1);
  return Colouring(std::move(classes)).normalized();
}

Colouring recolour_merge_two_unique(const Colouring& colouring, int class_index, Colour x, Colour y) {
  check_class(colouring, class_index);
  if (x == y) throw DomainError("merge needs two different colours");
  for (Colour c : {x, y}) {
    if (!in_class(colouring, class_index, c)) {
      throw DomainError("colour " + std::to_string(c) + " does not occur in class " + std::to_string(class_index));
    }
    if (colouring.occurrences_outside(class_index, c) > 0) {
      throw DomainError("colour " + std::to_string(c) + " also occurs outside class " + std::to_string(class_index));
    }
  }
  auto classes = colouring.classes();
  const Colour fresh = colouring.max_colour() + 1;
  for (Colour& c : classes[class_index]) {
    if (c == x || c == y) c = fresh;
  }
  return Colouring(std::move(classes)).normalized();
}

Colouring recolour_to_fixed(const Colouring& colouring, int class_index, Colour from, Colour to) {
  check_class(colouring, class_index);
  if (from == to || !in_class(colouring, class_index, from) || !in_class(colouring, class_index, to)) {
    throw DomainError("recolour_to_fixed needs two distinct colours present in the class");
  }
  auto classes = colouring.classes();
  std::replace(classes[class_index].begin(), classes[class_index].end(), from, to);
  return Colouring(std::move(classes));
}

std::vector<Colouring> palette_descent(const HypergraphSpec& spec) {
  const int m = spec.beta / spec.s();
  std::vector<Colouring> out{layered_colouring(spec, spec.n * m)};
  for (int j = 0; j < spec.n; ++j) {
    const Colour fixed = j * m;
    for (int c = 1; c < m; ++c) out.push_back(recolour_to_fixed(out.back(), j, fixed + c, fixed));
  }
  return out;
}

int walk_target(const HypergraphSpec& spec, WalkDirection direction) {
  if (direction == WalkDirection::down) return spec.n + 1;
  return static_cast<int>(mono_zone_lower_bound(spec)) - 1;
}

namespace {

std::vector<Colour> private_colours(const Colouring& c, int i) {
  std::vector<Colour> out;
  const auto& cls = c.class_colours(i);
  for (std::size_t v = 0; v < cls.size(); ++v) {
    if (v > 0 && cls[v] == cls[v - 1]) continue;
    if (c.occurrences_outside(i, cls[v]) == 0) out.push_back(cls[v]);
  }
  return out;
}

std::vector<Colour> distinct(const std::vector<Colour>& cls) {
  std::vector<Colour> out(cls);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

std::vector<WalkStep> spectrum_walk(const HypergraphSpec& spec, const Colouring& start, WalkDirection direction,
                                    const SearchLimits& limits) {
  const int s = spec.s();
  if (spec.alpha != 2 || spec.sigma.delta_min() < spec.r() - spec.beta + 1 || s < 2 || s > spec.beta) {
    throw DomainError("spectrum walk requires alpha = 2, delta >= r-beta+1 and 2 <= s <= beta");
  }
  if (!is_valid(spec, start)) throw DomainError("walk start is not a valid colouring");

  const int target = walk_target(spec, direction);
  const int step_sign = direction == WalkDirection::down ? -1 : 1;
  std::vector<WalkStep> walk;
  Colouring current = start.normalized();
  walk.push_back(WalkStep{current, current.colour_count(), true, false, {}});

  auto reached = [&](int k) { return direction == WalkDirection::down ? k <= target : k >= target; };

  while (!reached(current.colour_count())) {
    const int k = current.colour_count();
    std::vector<RecolourStep> moves;
    bool advanced = false;
    // Same-count moves raise the number of monochromatic classes, so at most n of them.
    for (int guard = 0; guard <= spec.n && !advanced; ++guard) {
      int merge_class = -1;
      int grow_class = -1;
      int settle_class = -1;
      for (int i = 0; i < current.n(); ++i) {
        const auto priv = private_colours(current, i);
        const bool mono = current.class_is_monochromatic(i);
        if (priv.size() >= 2 && merge_class < 0) merge_class = i;
        if (priv.empty() && grow_class < 0) grow_class = i;
        if (priv.size() == 1 && !mono && settle_class < 0) settle_class = i;
      }
      const int chosen = direction == WalkDirection::down ? merge_class : grow_class;
      Colouring next;
      RecolourStep move;
      if (chosen >= 0) {
        move.class_index = chosen;
        move.colours_before = distinct(current.class_colours(chosen));
        if (direction == WalkDirection::down) {
          const auto priv = private_colours(current, chosen);
          move.kind = RecolourKind::merge_two_unique_to_new;
          next = recolour_merge_two_unique(current, chosen, priv[0], priv[1]);
        } else {
          move.kind = RecolourKind::whole_class_to_new;
          next = recolour_whole_class(current, chosen);
        }
        advanced = true;
      } else if (settle_class >= 0) {
        move.class_index = settle_class;
        move.colours_before = distinct(current.class_colours(settle_class));
        move.kind = RecolourKind::whole_class_to_new;
        next = recolour_whole_class(current, settle_class);
      } else {
        break;
      }
      move.colours_after = distinct(next.class_colours(move.class_index));
      moves.push_back(std::move(move));
      if (!is_valid(spec, next)) {
        throw TheoremViolation("recolouring of class " + std::to_string(moves.back().class_index) +
                               " produced an invalid colouring of " + spec.to_string());
      }
      current = std::move(next);
    }

    if (advanced) {
      walk.push_back(WalkStep{current, current.colour_count(), true, false, std::move(moves)});
      continue;
    }
    const int wanted = k + step_sign;
    const auto decision = decide_k(spec, wanted, limits);
    if (decision.verdict == Verdict::infeasible) {
      throw TheoremViolation(spec.to_string() + " has a " + std::to_string(k) + "-colouring but no " +
                             std::to_string(wanted) + "-colouring");
    }
    if (decision.verdict == Verdict::unknown) {
      throw Error("node budget exhausted while deciding k=" + std::to_string(wanted));
    }
    current = *decision.witness;
    walk.push_back(WalkStep{current, wanted, is_valid(spec, current), true, std::move(moves)});
  }
  return walk;
}

}  // namespace sigma_spectra
