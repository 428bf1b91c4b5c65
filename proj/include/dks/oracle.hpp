#pragma once

#include <cstdint>
#include <vector>

#include "dks/selection.hpp"

namespace dks::oracle {

struct ExactDks {
  double value = 0.0;
  VertexSelection best; ///< lexicographically smallest maximizer
};

/// Exhaustive densest-k-subgraph at loading lambda. Refuses C(n,k) > 1e7.
ExactDks exact_dks(const Graph &g, Vertex k, double lambda);

/// A maximum clique (branch and bound), n <= 32.
std::vector<Vertex> maximum_clique(const Graph &g);
Vertex max_clique_size(const Graph &g);

/// All maximal cliques (Bron-Kerbosch with pivoting), n <= 32.
std::vector<std::vector<Vertex>> maximal_cliques(const Graph &g);

struct SimplexMax {
  double value = 0.0;
  Vector point;
};

/// max x^T (A + lambda I) x over {x >= 0, sum x = scale} by multi-start
/// projected gradient ascent. Starts: `restarts` seeded random interior
/// points plus the uniform point on every maximal clique. n <= 32.
SimplexMax simplex_qp_max(const Graph &g, double lambda, double scale, int restarts,
                          std::uint64_t seed);

/// Euclidean projection onto {x >= 0, sum x = scale} (sort based).
Vector project_to_simplex(const Vector &v, double scale);

/// Euclidean projection onto {x in [0,1]^n, sum x = k} (bisection on the shift).
Vector project_to_capped_simplex(const Vector &v, double k);

struct DenseEig {
  Vector values;  ///< descending
  Matrix vectors; ///< column i pairs with values[i]
};

/// Full eigendecomposition of A by cyclic Jacobi rotations, n <= 64.
DenseEig dense_eig(const Graph &g);
DenseEig jacobi_eigensolver(Matrix a);

/// Dense adjacency matrix.
Matrix adjacency_matrix(const Graph &g);

} // namespace dks::oracle
