#include "dks/rounding.hpp"

#include <cmath>
#include <vector>

namespace dks {

namespace {

bool fractional(double v) { return std::min(v, 1.0 - v) > kFractionalThreshold; }

// s_i = sum of x over the neighbors of i.
Vector neighbor_mass(const Graph &g, const Vector &x) { return loaded_matvec(g, 0.0, x); }

std::optional<RoundingStep> pick_pair(const ProblemInstance &inst, const Vector &x,
                                      const Vector &s, const std::vector<Vertex> &frac) {
  if (frac.size() < 2)
    return std::nullopt;
  const double lambda = inst.lambda;
  auto score = [&](Vertex v) { return lambda * x[v] + s[v]; };

  RoundingStep step;
  step.i = frac.front();
  for (Vertex v : frac)
    if (score(v) > score(step.i))
      step.i = v;
  for (Vertex v : frac) {
    if (v == step.i)
      continue;
    if (step.j < 0 || score(v) < score(step.j))
      step.j = v;
  }
  step.score_i = score(step.i);
  step.score_j = score(step.j);
  step.delta = std::min(x[step.j], 1.0 - x[step.i]);
  step.adjacent = inst.graph.has_edge(step.i, step.j);
  return step;
}

std::vector<Vertex> fractional_indices(const Vector &x) {
  std::vector<Vertex> out;
  for (Eigen::Index v = 0; v < x.size(); ++v)
    if (fractional(x[v]))
      out.push_back(static_cast<Vertex>(v));
  return out;
}

} // namespace

std::optional<RoundingStep> next_rounding_step(const ProblemInstance &inst, const Vector &x) {
  return pick_pair(inst, x, neighbor_mass(inst.graph, x), fractional_indices(x));
}

void apply_rounding_step(Vector &x, const RoundingStep &step) {
  x[step.i] += step.delta;
  x[step.j] -= step.delta;
}

FractionalPoint round_to_integral(const ProblemInstance &inst, const FractionalPoint &point) {
  if (inst.lambda < 1.0)
    throw std::invalid_argument("rounding requires lambda >= 1 (monotonicity fails below 1)");
  const Graph &g = inst.graph;
  if (point.x.size() != g.n() || !point.feasible(inst.k))
    throw std::domain_error("rounding input is not a feasible point");

  Vector x = point.x;
  for (Eigen::Index v = 0; v < x.size(); ++v)
    if (!fractional(x[v]))
      x[v] = std::round(std::clamp(x[v], 0.0, 1.0));

  Vector s = neighbor_mass(g, x);
  std::vector<Vertex> frac = fractional_indices(x);
  auto settle = [&](Vertex v) {
    if (fractional(x[v]))
      return false;
    x[v] = std::round(x[v]);
    return true;
  };
  while (auto step = pick_pair(inst, x, s, frac)) {
    const double before_i = x[step->i], before_j = x[step->j];
    apply_rounding_step(x, *step);
    const bool done_i = settle(step->i);
    const bool done_j = settle(step->j);
    // Snapping may move a coordinate by up to the threshold; track it exactly.
    const double moved_i = x[step->i] - before_i;
    const double moved_j = x[step->j] - before_j;
    for (Vertex u : g.neighbors(step->i))
      s[u] += moved_i;
    for (Vertex u : g.neighbors(step->j))
      s[u] += moved_j;
    if (done_i || done_j)
      std::erase_if(frac, [&](Vertex v) {
        return (v == step->i && done_i) || (v == step->j && done_j);
      });
  }

  // Repair: the budget residue is below n * threshold, so at most one
  // coordinate (plus a lone leftover fraction) needs adjusting.
  const std::vector<double> original(point.x.data(), point.x.data() + point.x.size());
  for (Vertex v : frac)
    x[v] = std::round(x[v]);
  auto total = static_cast<long long>(std::llround(x.sum()));
  while (total < inst.k) {
    Vertex best = -1;
    for (Vertex v = 0; v < g.n(); ++v)
      if (x[v] == 0.0 && (best < 0 || original[v] > original[best]))
        best = v;
    x[best] = 1.0;
    ++total;
  }
  while (total > inst.k) {
    Vertex best = -1;
    for (Vertex v = 0; v < g.n(); ++v)
      if (x[v] == 1.0 && (best < 0 || original[v] < original[best]))
        best = v;
    x[best] = 0.0;
    --total;
  }
  return FractionalPoint{std::move(x)};
}

VertexSelection project_top_k(const Graph &g, const Vector &x, Vertex k, double lambda) {
  return make_selection(g, top_k_indices(x, k), lambda);
}

} // namespace dks
