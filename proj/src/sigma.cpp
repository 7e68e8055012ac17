#include "sigma_spectra/sigma.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "sigma_spectra/errors.hpp"

namespace sigma_spectra {

Sigma Sigma::build(std::vector<int> parts) {
  if (parts.empty()) throw InvalidPartition("partition must have at least one part");
  for (int p : parts) {
    if (p < 1) throw InvalidPartition("partition parts must be positive, got " + std::to_string(p));
  }
  std::sort(parts.begin(), parts.end(), std::greater<>());
  Sigma sigma;
  sigma.r_ = std::accumulate(parts.begin(), parts.end(), 0);
  sigma.parts_ = std::move(parts);
  return sigma;
}

std::string Sigma::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
  os << ')';
  return os.str();
}

HypergraphSpec HypergraphSpec::make(int n, int q, Sigma sigma, int alpha, int beta) {
  if (n < 1) throw DomainError("n must be >= 1");
  if (q < 1) throw DomainError("q must be >= 1");
  if (alpha < 2) throw DomainError("alpha must be >= 2");
  if (beta < alpha) throw DomainError("beta must be >= alpha");
  return HypergraphSpec{n, q, std::move(sigma), alpha, beta};
}

std::string HypergraphSpec::to_string() const {
  std::ostringstream os;
  os << "H(" << n << ',' << r() << ',' << q << '|' << sigma.to_string() << ") alpha=" << alpha
     << " beta=" << beta;
  return os.str();
}

std::vector<std::vector<int>> distinct_part_orders(std::span<const int> parts) {
  std::vector<int> p(parts.begin(), parts.end());
  std::sort(p.begin(), p.end());
  std::vector<std::vector<int>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::vector<EdgeShape> edge_shapes(const HypergraphSpec& spec) {
  std::vector<EdgeShape> out;
  if (!spec.has_edges()) return out;
  const int s = spec.s();
  const auto orders = distinct_part_orders(spec.sigma.parts());
  std::vector<int> tuple(s);
  std::iota(tuple.begin(), tuple.end(), 0);
  while (true) {
    for (const auto& order : orders) out.push_back(EdgeShape{tuple, order});
    // next s-combination of [0, n)
    int i = s - 1;
    while (i >= 0 && tuple[i] == spec.n - s + i) --i;
    if (i < 0) break;
    ++tuple[i];
    for (int j = i + 1; j < s; ++j) tuple[j] = tuple[j - 1] + 1;
  }
  return out;
}

namespace {

unsigned long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  unsigned long long c = 1;
  for (int i = 1; i <= k; ++i) c = c * static_cast<unsigned long long>(n - k + i) / i;
  return c;
}

}  // namespace

unsigned long long edge_count(const HypergraphSpec& spec) {
  unsigned long long total = 0;
  for (const auto& shape : edge_shapes(spec)) {
    unsigned long long prod = 1;
    for (int a : shape.parts) prod *= binomial(spec.q, a);
    total += prod;
  }
  return total;
}

}  // namespace sigma_spectra
