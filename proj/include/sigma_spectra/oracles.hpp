#pragma once

// Exhaustive reference computations. These deliberately avoid the closed forms,
// the profile reduction and the symmetry-reduced search, and are used only to
// cross-check them on small inputs.

#include <optional>
#include <vector>

#include "sigma_spectra/colouring.hpp"
#include "sigma_spectra/sigma.hpp"

namespace sigma_spectra::oracle {

/// Max over non-increasing positive vectors of length b (first a-1 entries
/// summing to at most d-1) of the vector sum, by enumeration.
long long lemma_f_exhaustive(int a, int b, int d);

/// Shortest such vector of length >= a summing to n; nullopt when none exists.
std::optional<int> lemma_bmin_exhaustive(int a, int d, int n);

/// Every partition of n in non-increasing order.
std::vector<std::vector<int>> partitions(int n);

/// Vertex sets of all edges of H; vertex v lives in class v / q.
std::vector<std::vector<int>> literal_edges(const HypergraphSpec& spec);

/// Checks every edge by counting its distinct colours directly.
bool literal_is_valid(const HypergraphSpec& spec, const Colouring& colouring);

/// Min and max distinct colours over every per-class vertex selection.
std::pair<int, int> literal_edge_colour_range(const std::vector<std::vector<Colour>>& classes,
                                              const std::vector<int>& parts);

/// Largest instance brute_oracle accepts.
inline constexpr int kBruteVertexLimit = 12;

/// Decides whether a k-(alpha,beta)-colouring exists by enumerating every
/// assignment of k colours up to colour renaming (restricted growth strings)
/// and checking literal edges. Throws InstanceTooLarge when nq > 12.
bool brute_oracle(const HypergraphSpec& spec, int k);

}  // namespace sigma_spectra::oracle
