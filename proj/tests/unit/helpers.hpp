#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "sigma_spectra/colouring.hpp"
#include "sigma_spectra/sigma.hpp"

namespace sigma_spectra::testing {

inline HypergraphSpec spec_of(int n, int q, std::vector<int> parts, int alpha, int beta) {
  return HypergraphSpec::make(n, q, Sigma::build(std::move(parts)), alpha, beta);
}

/// Uniform colours from [0, palette) on every vertex.
inline Colouring random_colouring(std::mt19937& rng, int n, int q, int palette) {
  std::uniform_int_distribution<int> pick(0, palette - 1);
  std::vector<std::vector<Colour>> classes(n, std::vector<Colour>(q));
  for (auto& cls : classes) {
    for (auto& c : cls) c = pick(rng);
  }
  return Colouring(std::move(classes));
}

/// Applies a random class permutation and a random injective colour renaming.
inline Colouring scramble(std::mt19937& rng, const Colouring& c) {
  std::vector<int> order(c.n());
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<Colour> rename(c.max_colour() + 1);
  std::iota(rename.begin(), rename.end(), 3);
  std::shuffle(rename.begin(), rename.end(), rng);
  std::vector<std::vector<Colour>> classes;
  for (int i : order) {
    std::vector<Colour> cls;
    for (Colour x : c.class_colours(i)) cls.push_back(rename[x]);
    classes.push_back(cls);
  }
  return Colouring(std::move(classes));
}

/// Every spec with n*q <= max_vertices over the listed partitions, alpha <= beta <= r.
inline std::vector<HypergraphSpec> small_specs(int max_vertices, const std::vector<std::vector<int>>& sigmas) {
  std::vector<HypergraphSpec> out;
  for (const auto& parts : sigmas) {
    const int r = std::accumulate(parts.begin(), parts.end(), 0);
    for (int alpha = 2; alpha <= r; ++alpha) {
      for (int beta = alpha; beta <= r; ++beta) {
        for (int n = 1; n <= max_vertices; ++n) {
          for (int q = 1; n * q <= max_vertices; ++q) out.push_back(spec_of(n, q, parts, alpha, beta));
        }
      }
    }
  }
  return out;
}

}  // namespace sigma_spectra::testing
