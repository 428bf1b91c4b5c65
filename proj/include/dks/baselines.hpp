#pragma once

#include "dks/linalg.hpp"
#include "dks/selection.hpp"

namespace dks {

/// Feige's two-phase greedy: ceil(k/2) highest-degree vertices H, then the
/// floor(k/2) vertices outside H with most neighbors in H. Lowest index
/// wins every tie.
VertexSelection greedy_feige(const Graph &g, Vertex k);

/// Top-k entries of the sign-normalized leading eigenvector of A, i.e. the
/// exact maximizer of the rank-1 surrogate.
VertexSelection rank1_lrbo(const Graph &g, Vertex k);
VertexSelection rank1_lrbo(const Graph &g, Vertex k, const TopSingularValues &spectrum);

/// Power-iteration settings used when the spectrum feeds a certificate.
PowerOptions certificate_power_options();

/// Normalized-density upper bound
///   min{1, theta1 (sum_{S1} u1)^2 / (k(k-1)) + sigma2/(k-1), sigma1/(k-1)}
/// with S1 the rank-1 selection. Requires k >= 2.
double density_upper_bound(const Graph &g, Vertex k);
double density_upper_bound(const Graph &g, Vertex k, const TopSingularValues &spectrum);

} // namespace dks
