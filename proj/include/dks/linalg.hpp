#pragma once

#include <cstdint>

#include "dks/graph.hpp"
#include "dks/types.hpp"

namespace dks {

/// out = (A + lambda I) x in one pass over the adjacency and one over x.
template <typename Derived, typename OutDerived>
void loaded_matvec_into(const Graph &g, typename Derived::Scalar lambda,
                        const Eigen::MatrixBase<Derived> &x,
                        const Eigen::MatrixBase<OutDerived> &out_) {
  using Scalar = typename Derived::Scalar;
  auto &out = const_cast<Eigen::MatrixBase<OutDerived> &>(out_);
  if (x.size() != g.n())
    throw std::domain_error("vector length does not match vertex count");
  out.derived().resize(g.n());
  const auto &offsets = g.row_offsets();
  const auto &adj = g.neighbor_array();
  for (Vertex i = 0; i < g.n(); ++i) {
    Scalar acc(0);
    for (std::int64_t e = offsets[i]; e < offsets[i + 1]; ++e)
      acc += x.coeff(adj[e]);
    out.coeffRef(i) = acc + lambda * x.coeff(i);
  }
}

template <typename Derived>
VectorX<typename Derived::Scalar> loaded_matvec(const Graph &g, typename Derived::Scalar lambda,
                                                const Eigen::MatrixBase<Derived> &x) {
  VectorX<typename Derived::Scalar> out(g.n());
  loaded_matvec_into(g, lambda, x, out);
  return out;
}

struct PowerOptions {
  double tol = 1e-6;
  int max_iters = 1000;
  std::uint64_t seed = 0x5eed;
};

struct SpectralEstimate {
  double value = 0.0;
  Vector vector;
  int iterations = 0;
  bool converged = false;
};

/// ||A + lambda I||_2 by power iteration from the normalized all-ones vector.
///
/// The estimate is ||M v|| for the current unit iterate v, which converges to
/// the Perron root even on bipartite graphs where +r and -r share modulus.
/// The returned vector is the Perron eigenvector (nonnegative up to
/// rounding). Non-convergence is reported through `converged`, not thrown.
SpectralEstimate spectral_norm(const Graph &g, double lambda, const PowerOptions &opts = {});

struct TopSingularValues {
  double sigma1 = 0.0;
  double theta1 = 0.0; ///< signed leading eigenvalue (equals sigma1 for A >= 0)
  Vector u1;
  double sigma2 = 0.0;
  bool converged = false;
};

/// sigma1, u1 of the adjacency matrix and sigma2 from the deflated operator
/// x -> A x - theta1 u1 (u1^T x).
TopSingularValues top_two_singular_values(const Graph &g, const PowerOptions &opts = {});

} // namespace dks
