#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "dks/graph.hpp"

namespace dks::families {

Graph complete(Vertex n);
Graph edgeless(Vertex n);
Graph path(Vertex n);
Graph star(Vertex leaves); ///< center is vertex 0
Graph triangle();
Graph disjoint_triangles(Vertex count);

/// G(n, p) with a caller-owned generator.
Graph random_graph(Vertex n, double p, std::mt19937_64 &rng);

/// G(n, m): m distinct uniformly random edges.
Graph random_graph_nm(Vertex n, std::int64_t m, std::mt19937_64 &rng);

/// Every connected graph on 1..max_n vertices up to isomorphism
/// (1, 1, 2, 6, 21, 112 graphs for n = 1..6). max_n <= 6.
std::vector<Graph> connected_graphs(Vertex max_n);

struct FamilySpec {
  Vertex exhaustive_max_n = 6; ///< all connected graphs up to this size
  int random_count = 50;       ///< plus seeded G(n, p) graphs
  Vertex random_min_n = 7;
  Vertex random_max_n = 12;
  std::uint64_t seed = 0;
};

/// The small-instance family used by the theory checks. Random members
/// draw p uniformly from [0.25, 0.85].
std::vector<Graph> test_family(const FamilySpec &spec = {});

/// Sparse graph of n vertices and about m edges containing a planted clique
/// of `clique` vertices inside overlapping dense communities.
Graph planted_clique_graph(Vertex n, std::int64_t m, Vertex clique, std::uint64_t seed);

} // namespace dks::families
