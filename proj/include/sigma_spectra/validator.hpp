#pragma once

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "sigma_spectra/colouring.hpp"
#include "sigma_spectra/sigma.hpp"

namespace sigma_spectra {

struct ColourRange {
  int min_distinct = 0;
  int max_distinct = 0;

  friend bool operator==(const ColourRange&, const ColourRange&) = default;
};

/// A concrete edge with too few or too many colours.
struct EdgeWitness {
  std::vector<int> class_tuple;
  std::vector<int> part_assignment;
  std::vector<std::map<Colour, int>> per_class_choice;  // colour -> chosen vertices
  int distinct_colours = 0;

  friend bool operator==(const EdgeWitness&, const EdgeWitness&) = default;
};

/// Extreme distinct-colour counts over every way of drawing parts[j] vertices
/// from the class with profiles[j].
///
/// The minimum is the size of the smallest colour set T whose vertices fill
/// every part (sum over T of the multiplicities in class j is at least
/// parts[j]). The maximum is a transversal problem: class j may contribute up
/// to parts[j] of its colours, solved as a bipartite b-matching.
///
/// Throws DimensionMismatch on unequal lengths and InfeasibleShape when a part
/// exceeds its class.
ColourRange edge_colour_range(std::span<const ClassProfile> profiles, std::span<const int> parts);

/// Every edge has between alpha and beta colours. Edge shapes are checked in
/// parallel when OpenMP is available.
bool is_valid(const HypergraphSpec& spec, const Colouring& colouring);

/// Single-threaded reference for is_valid; stops at the first bad shape.
bool is_valid_serial(const HypergraphSpec& spec, const Colouring& colouring);

/// Witness for the first violating shape in edge_shapes order, or nullopt.
std::optional<EdgeWitness> find_violation(const HypergraphSpec& spec, const Colouring& colouring);

}  // namespace sigma_spectra
