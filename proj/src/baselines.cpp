#include "dks/baselines.hpp"

#include <algorithm>

namespace dks {

namespace {

void check_k(const Graph &g, Vertex k, Vertex min_k) {
  if (k < min_k)
    throw std::domain_error("k must be >= " + std::to_string(min_k));
  if (k > g.n())
    throw std::domain_error("k exceeds the vertex count");
}

} // namespace

VertexSelection greedy_feige(const Graph &g, Vertex k) {
  check_k(g, k, 2);
  const Vertex head = (k + 1) / 2;
  Eigen::VectorXi degree = Eigen::Map<const Eigen::VectorXi>(g.degrees().data(), g.n());
  auto chosen = top_k_indices(degree, head);

  std::vector<char> in_head(g.n(), 0);
  for (Vertex v : chosen)
    in_head[v] = 1;
  // Members of H get -1 so they never win the second phase.
  Eigen::VectorXi links = Eigen::VectorXi::Zero(g.n());
  for (Vertex v = 0; v < g.n(); ++v) {
    if (in_head[v]) {
      links[v] = -1;
      continue;
    }
    for (Vertex u : g.neighbors(v))
      links[v] += in_head[u];
  }
  auto tail = top_k_indices(links, k - head);
  chosen.insert(chosen.end(), tail.begin(), tail.end());
  return make_selection(g, std::move(chosen), 1.0);
}

PowerOptions certificate_power_options() {
  PowerOptions opts;
  opts.tol = 1e-12;
  opts.max_iters = 20000;
  return opts;
}

VertexSelection rank1_lrbo(const Graph &g, Vertex k) {
  check_k(g, k, 1);
  const auto lead = spectral_norm(g, 0.0, certificate_power_options());
  return make_selection(g, top_k_indices(lead.vector, k), 1.0);
}

VertexSelection rank1_lrbo(const Graph &g, Vertex k, const TopSingularValues &spectrum) {
  check_k(g, k, 1);
  return make_selection(g, top_k_indices(spectrum.u1, k), 1.0);
}

double density_upper_bound(const Graph &g, Vertex k) {
  return density_upper_bound(g, k, top_two_singular_values(g, certificate_power_options()));
}

double density_upper_bound(const Graph &g, Vertex k, const TopSingularValues &spectrum) {
  check_k(g, k, 2);
  const auto selection = top_k_indices(spectrum.u1, k);
  double mass = 0.0;
  for (Vertex v : selection)
    mass += spectrum.u1[v];
  const double kk = k;
  const double rank1 = spectrum.theta1 * mass * mass / (kk * (kk - 1.0)) + spectrum.sigma2 / (kk - 1.0);
  const double spectral = spectrum.sigma1 / (kk - 1.0);
  return std::clamp(std::min({1.0, rank1, spectral}), 0.0, 1.0);
}

} // namespace dks
