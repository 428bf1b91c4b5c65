#include <gtest/gtest.h>

#include "dks/families.hpp"
#include "dks/oracle.hpp"
#include "dks/rounding.hpp"
#include "dks/verify.hpp"

namespace dks {
namespace {

Vector vec(std::initializer_list<double> v) {
  Vector out(static_cast<Eigen::Index>(v.size()));
  std::copy(v.begin(), v.end(), out.data());
  return out;
}

Graph triangle_plus_isolated() {
  const std::vector<std::pair<Vertex, Vertex>> e{{0, 1}, {1, 2}, {0, 2}};
  return Graph::from_edges(4, e);
}

TEST(RoundToIntegral, TrianglePlusIsolatedVertex) {
  const Graph g = triangle_plus_isolated();
  const ProblemInstance inst(g, 2, 1.0);
  const FractionalPoint x{vec({0.5, 0.5, 1, 0})};
  const auto step = next_rounding_step(inst, x.x);
  ASSERT_TRUE(step);
  EXPECT_EQ(step->i, 0);
  EXPECT_EQ(step->j, 1);
  EXPECT_DOUBLE_EQ(step->delta, 0.5);
  const auto r = round_to_integral(inst, x);
  EXPECT_EQ(r.x, vec({1, 0, 1, 0}));
  EXPECT_DOUBLE_EQ(objective(inst, x), 4.0);
  EXPECT_DOUBLE_EQ(objective(inst, r), 4.0);
}

TEST(RoundToIntegral, IntegralInputUnchanged) {
  const Graph g = families::path(5);
  const auto x = FractionalPoint::indicator(5, {1, 4});
  EXPECT_EQ(round_to_integral(ProblemInstance(g, 2, 1.0), x).x, x.x);
}

TEST(RoundToIntegral, TriangleUniformPoint) {
  const Graph tri = families::triangle();
  const ProblemInstance inst(tri, 2, 1.0);
  const auto r = round_to_integral(inst, FractionalPoint::uniform(3, 2));
  EXPECT_TRUE(r.integral(0.0));
  EXPECT_EQ(r.x.sum(), 2.0);
  EXPECT_NEAR(objective(inst, r), 4.0, 1e-12);
}

TEST(RoundToIntegral, Preconditions) {
  const Graph tri = families::triangle();
  EXPECT_THROW(round_to_integral(ProblemInstance(tri, 2, 0.5), FractionalPoint::uniform(3, 2)),
               std::invalid_argument);
  EXPECT_THROW(round_to_integral(ProblemInstance(tri, 2, 1.0), FractionalPoint{vec({1, 1, 1})}),
               std::domain_error);
}

TEST(RoundToIntegral, NearIntegralCoordinatesSnapAndBudgetIsRepaired) {
  const Graph g = families::path(4);
  const ProblemInstance inst(g, 2, 1.0);
  const FractionalPoint x{vec({1.0 - 4e-10, 1e-10, 1.0, 3e-10})};
  const auto r = round_to_integral(inst, x);
  EXPECT_TRUE(r.integral(0.0));
  EXPECT_EQ(r.x.sum(), 2.0);
  EXPECT_GE(objective(inst, r), objective(inst, x) - 1e-9);
}

TEST(RoundToIntegral, MonotoneOnRandomPoints) {
  verify::RoundingOptions opts;
  opts.points = 3000;
  opts.seed = 99;
  const auto res = verify::rounding_suite(opts);
  EXPECT_TRUE(res.passed) << res.failure;
}

TEST(RoundingStep, GainMatchesClosedForm) {
  // The exact change of g for one transfer is
  //   2 delta (score_i - score_j) + 2 lambda delta^2 (non-edge)
  //   2 delta (score_i - score_j) + 2 (lambda - 1) delta^2 (edge).
  std::mt19937_64 rng(7);
  int steps = 0;
  for (int rep = 0; rep < 300; ++rep) {
    const Graph g = families::random_graph(12, 0.4, rng);
    const Vertex k = 1 + rep % 11;
    const ProblemInstance inst(g, k, 1.0 + 0.01 * (rep % 100));
    Vector x = verify::random_feasible_point(g.n(), k, rng);
    const auto step = next_rounding_step(inst, x);
    if (!step)
      continue;
    ++steps;
    EXPECT_GE(step->score_i, step->score_j);
    Vector y = x;
    apply_rounding_step(y, *step);
    const double d = step->delta;
    const double quad = step->adjacent ? 2.0 * (inst.lambda - 1.0) * d * d : 2.0 * inst.lambda * d * d;
    const double predicted = 2.0 * d * (step->score_i - step->score_j) + quad;
    EXPECT_NEAR(objective(inst, y) - objective(inst, x), predicted, 1e-10);
    // At least one of the two coordinates becomes integral.
    EXPECT_TRUE(std::min(y[step->i], 1.0 - y[step->i]) <= kFractionalThreshold ||
                std::min(y[step->j], 1.0 - y[step->j]) <= kFractionalThreshold);
  }
  EXPECT_GT(steps, 200);
}

TEST(RoundingStep, StrictAscentAboveUnitLoading) {
  verify::LandscapeOptions opts;
  opts.points = 300;
  opts.seed = 5;
  const auto res = verify::landscape_suite(opts);
  EXPECT_TRUE(res.passed) << res.failure;
}

TEST(ProjectTopK, Examples) {
  const Graph g = families::edgeless(4);
  EXPECT_EQ(project_top_k(g, vec({0.9, 0.1, 0.8, 0.2}), 2).vertices, (std::vector<Vertex>{0, 2}));
  EXPECT_EQ(project_top_k(g, vec({0, 1, 0, 1}), 2).vertices, (std::vector<Vertex>{1, 3}));
  const Graph tri = families::triangle();
  const auto sel = project_top_k(tri, vec({0.5, 0.5, 0.5}), 2);
  EXPECT_EQ(sel.vertices, (std::vector<Vertex>{0, 1}));
  EXPECT_EQ(sel.induced_edges, 1);
  EXPECT_DOUBLE_EQ(sel.normalized_density, 1.0);
}

TEST(VertexSelection, Invariants) {
  std::mt19937_64 rng(31);
  for (int rep = 0; rep < 50; ++rep) {
    const Graph g = families::random_graph(20, 0.3, rng);
    const Vertex k = 2 + rep % 18;
    Vector x(g.n());
    for (auto &v : x)
      v = std::uniform_real_distribution<double>(0, 1)(rng);
    const double lambda = 0.5 * (rep % 5);
    const auto sel = project_top_k(g, x, k, lambda);
    ASSERT_EQ(static_cast<Vertex>(sel.vertices.size()), k);
    EXPECT_TRUE(std::is_sorted(sel.vertices.begin(), sel.vertices.end()));
    EXPECT_EQ(std::adjacent_find(sel.vertices.begin(), sel.vertices.end()), sel.vertices.end());
    EXPECT_DOUBLE_EQ(sel.normalized_density, 2.0 * sel.induced_edges / (k * (k - 1.0)));
    EXPECT_DOUBLE_EQ(sel.objective_at_lambda, 2.0 * sel.induced_edges + lambda * k);
  }
}

} // namespace
} // namespace dks
