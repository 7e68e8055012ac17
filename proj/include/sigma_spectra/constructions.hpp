#pragma once

#include <string>
#include <vector>

#include "sigma_spectra/closed_forms.hpp"
#include "sigma_spectra/colouring.hpp"
#include "sigma_spectra/engine.hpp"
#include "sigma_spectra/sigma.hpp"

namespace sigma_spectra {

/// Class counts per colour used by mono_colouring: one class per colour, then
/// the remaining classes poured into colours in order, the first
/// (s-1) - (alpha-1) floor((s-1)/(alpha-1)) colours holding up to
/// floor((s-1)/(alpha-1)) + 1 classes and the rest up to floor((s-1)/(alpha-1)).
/// Throws Infeasible when k is outside the monochromatic zone.
MonoDistribution mono_distribution(const HypergraphSpec& spec, int k);

/// Every class monochromatic, exactly k colours, colour i on a block of
/// consecutive classes.
Colouring mono_colouring(const HypergraphSpec& spec, int k);

/// Class j carries its own palette of m = floor(beta/s) colours; k_target - n*m
/// vertices (at most beta - m*s) are then moved onto fresh singleton colours.
/// Requires alpha <= s <= beta and n*m <= k_target <= n*m + beta - m*s.
Colouring layered_colouring(const HypergraphSpec& spec, int k_target);

/// The same beta colours in every class: (Delta-1) - (alpha-1)F of them on
/// F+1 vertices and the rest on F vertices, F = floor((Delta-1)/(alpha-1)).
/// Requires Delta >= alpha and q equal to the gap-instance class size.
Colouring beta_colouring(const HypergraphSpec& spec);

enum class RecolourKind { whole_class_to_new, merge_two_unique_to_new, split_to_fixed };

std::string to_string(RecolourKind kind);

struct RecolourStep {
  int class_index = 0;
  RecolourKind kind = RecolourKind::whole_class_to_new;
  std::vector<Colour> colours_before;
  std::vector<Colour> colours_after;
};

/// Recolours every vertex of the class with a colour used nowhere else.
/// Class order is kept and colours are renumbered densely.
Colouring recolour_whole_class(const Colouring& colouring, int class_index);

/// Replaces the private colours x and y of the class by one fresh colour.
/// Throws DomainError when x == y, either is missing from the class, or either
/// occurs in another class.
Colouring recolour_merge_two_unique(const Colouring& colouring, int class_index, Colour x, Colour y);

/// Moves every vertex of colour `from` in the class onto colour `to`, which
/// must already be present there.
Colouring recolour_to_fixed(const Colouring& colouring, int class_index, Colour from, Colour to);

/// layered_colouring at n*m colours followed by the palette collapse one colour
/// at a time (class after class) down to n monochromatic classes. Element i
/// uses n*m - i colours.
std::vector<Colouring> palette_descent(const HypergraphSpec& spec);

enum class WalkDirection { up, down };

struct WalkStep {
  Colouring colouring;
  int colour_count = 0;
  bool valid = false;
  bool fallback = false;  // produced by the exact engine instead of recolouring
  std::vector<RecolourStep> moves;  // recolourings since the previous step
};

/// Walks the (2,beta)-spectrum one colour at a time with the recolouring
/// lemmas: down towards n+1, or up towards the zone start minus one.
/// Requires alpha = 2, delta >= r-beta+1, 2 <= s <= beta and a valid start.
/// The first element is the start itself. When no recolouring applies the
/// adjacent colouring comes from decide_k and the step is flagged; an
/// infeasible adjacent count raises TheoremViolation.
std::vector<WalkStep> spectrum_walk(const HypergraphSpec& spec, const Colouring& start, WalkDirection direction,
                                    const SearchLimits& limits = {});

/// Target colour count of spectrum_walk for the given direction.
int walk_target(const HypergraphSpec& spec, WalkDirection direction);

}  // namespace sigma_spectra
