#include "dks/selection.hpp"

#include <algorithm>

namespace dks {

VertexSelection make_selection(const Graph &g, std::vector<Vertex> vertices, double lambda) {
  std::sort(vertices.begin(), vertices.end());
  VertexSelection sel;
  sel.induced_edges = induced_edge_count(g, vertices);
  const auto k = static_cast<double>(vertices.size());
  sel.normalized_density = vertices.size() >= 2 ? normalized_density(g, vertices) : 0.0;
  sel.objective_at_lambda = 2.0 * static_cast<double>(sel.induced_edges) + lambda * k;
  sel.vertices = std::move(vertices);
  return sel;
}

} // namespace dks
