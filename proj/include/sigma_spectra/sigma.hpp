#pragma once

#include <span>
#include <string>
#include <vector>

namespace sigma_spectra {

/// A partition of r, stored with its parts in non-increasing order.
class Sigma {
 public:
  /// Sorts the parts; throws InvalidPartition on an empty list or a part < 1.
  static Sigma build(std::vector<int> parts);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int r() const noexcept { return r_; }
  int s() const noexcept { return static_cast<int>(parts_.size()); }
  int delta_max() const noexcept { return parts_.front(); }
  int delta_min() const noexcept { return parts_.back(); }

  std::string to_string() const;  // "(6,6)"

  friend bool operator==(const Sigma&, const Sigma&) = default;

 private:
  Sigma() = default;
  std::vector<int> parts_;
  int r_ = 0;
};

/// The instance H(n, r, q | sigma) together with its (alpha, beta) constraint.
struct HypergraphSpec {
  int n = 0;
  int q = 0;
  Sigma sigma = Sigma::build({1});
  int alpha = 2;
  int beta = 2;

  /// Validates n, q >= 1 and 2 <= alpha <= beta; throws DomainError.
  static HypergraphSpec make(int n, int q, Sigma sigma, int alpha, int beta);

  int r() const noexcept { return sigma.r(); }
  int s() const noexcept { return sigma.s(); }
  int vertex_count() const noexcept { return n * q; }
  bool has_edges() const noexcept { return q >= sigma.delta_max() && n >= sigma.s(); }

  std::string to_string() const;  // "H(7,12,6|(6,6)) alpha=3 beta=3"

  friend bool operator==(const HypergraphSpec&, const HypergraphSpec&) = default;
};

/// One way to lay an edge over the classes: `classes` is strictly increasing,
/// `parts[i]` is the part size drawn from `classes[i]`.
struct EdgeShape {
  std::vector<int> classes;
  std::vector<int> parts;

  friend bool operator==(const EdgeShape&, const EdgeShape&) = default;
};

/// All distinct orderings of a multiset of part sizes, in lexicographic order.
std::vector<std::vector<int>> distinct_part_orders(std::span<const int> parts);

/// Every class tuple with every inequivalent part assignment. Tuples are
/// generated in lexicographic order; empty when the hypergraph has no edges.
std::vector<EdgeShape> edge_shapes(const HypergraphSpec& spec);

/// Number of edges of H, summing prod_j C(q, parts_j) over edge_shapes.
unsigned long long edge_count(const HypergraphSpec& spec);

}  // namespace sigma_spectra
