#pragma once

#include <filesystem>
#include <span>
#include <utility>
#include <vector>

#include "dks/types.hpp"

namespace dks {

/// Immutable undirected simple graph in CSR form.
///
/// Neighbor lists are strictly increasing and never contain the owning
/// vertex. Each vertex also carries the label it had in the source file
/// (identity when built from dense ids).
class Graph {
public:
  Graph() = default;

  /// Builds from dense ids in [0, n). Self-loops are dropped, both
  /// orientations are inserted and duplicates merged.
  static Graph from_edges(Vertex n, std::span<const std::pair<Vertex, Vertex>> edges,
                          std::vector<Label> labels = {});

  Vertex n() const noexcept { return n_; }
  std::int64_t m() const noexcept { return m_; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {neighbors_.data() + row_offsets_[v],
            static_cast<std::size_t>(row_offsets_[v + 1] - row_offsets_[v])};
  }
  Vertex degree(Vertex v) const noexcept { return degrees_[v]; }
  bool has_edge(Vertex u, Vertex v) const;

  const std::vector<std::int64_t> &row_offsets() const noexcept { return row_offsets_; }
  const std::vector<Vertex> &neighbor_array() const noexcept { return neighbors_; }
  const std::vector<Vertex> &degrees() const noexcept { return degrees_; }
  const std::vector<Label> &labels() const noexcept { return labels_; }
  Label label(Vertex v) const { return labels_[v]; }

  /// Dense id of an original label; -1 when the label is unknown.
  Vertex index_of(Label label) const;

  /// Undirected edge list with u < v, in CSR order.
  std::vector<std::pair<Vertex, Vertex>> edges() const;

private:
  Vertex n_ = 0;
  std::int64_t m_ = 0;
  std::vector<std::int64_t> row_offsets_{0};
  std::vector<Vertex> neighbors_;
  std::vector<Vertex> degrees_;
  std::vector<Label> labels_;
};

/// A graph together with subgraph size k and diagonal loading lambda.
struct ProblemInstance {
  ProblemInstance(const Graph &g, Vertex k, double lambda);

  const Graph &graph;
  Vertex k;
  double lambda;
};

/// Reads a whitespace separated edge list ("u v" per line, '#' comments).
///
/// Ids are compacted to 0..n-1 in order of first appearance and kept as
/// labels. Files ending in ".gz" are decompressed on the fly. Directed
/// inputs are symmetrized; the flag is informational since undirected
/// inputs listing both orientations collapse to the same graph.
Graph load_edge_list(const std::filesystem::path &path, bool directed_input = false);

/// Writes a graph in a form that load_edge_list reads back to identical
/// CSR arrays and labels. Vertices with no lower-numbered neighbor are
/// announced with a self-loop line so first-appearance order is kept.
void save_edge_list(const Graph &g, const std::filesystem::path &path);

/// Number of edges with both endpoints in `subset`.
std::int64_t induced_edge_count(const Graph &g, std::span<const Vertex> subset);

/// 2 * induced edges / (k (k - 1)) for k = |subset| >= 2.
double normalized_density(const Graph &g, std::span<const Vertex> subset);

} // namespace dks
