#pragma once

#include <vector>

#include "dks/graph.hpp"
#include "dks/types.hpp"

namespace dks {

/// An integral solution: a sorted k-subset with its induced statistics.
struct VertexSelection {
  std::vector<Vertex> vertices;
  std::int64_t induced_edges = 0;
  double normalized_density = 0.0; ///< 0 when k < 2
  double objective_at_lambda = 0.0; ///< 2 * induced_edges + lambda * k
};

VertexSelection make_selection(const Graph &g, std::vector<Vertex> vertices, double lambda);

/// Indices of the k largest entries, ties to the lowest index; sorted
/// ascending. Average O(n) via selection, no full sort.
template <typename Derived>
std::vector<Vertex> top_k_indices(const Eigen::MatrixBase<Derived> &values, Vertex k);

} // namespace dks

#include <algorithm>
#include <functional>

namespace dks {

template <typename Derived>
std::vector<Vertex> top_k_indices(const Eigen::MatrixBase<Derived> &values, Vertex k) {
  const auto n = static_cast<Vertex>(values.size());
  if (k < 0 || k > n)
    throw std::invalid_argument("top-k: k outside [0, n]");
  std::vector<Vertex> idx;
  idx.reserve(k);
  if (k == 0)
    return idx;
  // Find the k-th largest value, then collect indices in order: everything
  // above it, and as many of its ties as fit, lowest index first.
  using Scalar = typename Derived::Scalar;
  std::vector<Scalar> scratch(n);
  for (Vertex i = 0; i < n; ++i)
    scratch[i] = values.coeff(i);
  std::nth_element(scratch.begin(), scratch.begin() + (k - 1), scratch.end(), std::greater<>{});
  const Scalar kth = scratch[k - 1];
  Vertex above = 0;
  for (Vertex i = 0; i < n; ++i)
    above += values.coeff(i) > kth;
  Vertex ties_left = k - above;
  for (Vertex i = 0; i < n; ++i) {
    const Scalar v = values.coeff(i);
    if (v > kth || (v == kth && ties_left-- > 0))
      idx.push_back(i);
  }
  return idx;
}

} // namespace dks
