#include <gtest/gtest.h>

#include "dks/baselines.hpp"
#include "dks/families.hpp"
#include "dks/param.hpp"

namespace dks {
namespace {

double sigmoid(double t) { return 1.0 / (1.0 + std::exp(-t)); }

/// Central finite differences of g(theta_to_x(theta)).
Vector fd_gradient(const ProblemInstance &inst, const ThetaVector &theta, double h) {
  Vector grad(theta.theta.size());
  for (Eigen::Index i = 0; i < grad.size(); ++i) {
    ThetaVector plus = theta, minus = theta;
    plus.theta[i] += h;
    minus.theta[i] -= h;
    grad[i] = (objective(inst, theta_to_x(plus, inst.k)) -
               objective(inst, theta_to_x(minus, inst.k))) /
              (2.0 * h);
  }
  return grad;
}

TEST(ThetaToX, Examples) {
  const Vector sat = theta_to_x({Vector::Constant(6, -50.0)}, 2);
  EXPECT_LE(sat.maxCoeff(), 1e-20);
  EXPECT_LE(sat.sum(), 2.0);
  EXPECT_EQ(theta_to_x({Vector::Zero(2)}, 1), Vector::Constant(2, 0.5));
  const Vector third = theta_to_x({Vector::Zero(3)}, 1);
  for (int i = 0; i < 3; ++i)
    EXPECT_NEAR(third[i], 1.0 / 3.0, 1e-15);
}

TEST(ThetaToX, RangeOnRandomThetas) {
  std::mt19937_64 rng(1);
  std::normal_distribution<double> z(0.0, 4.0);
  for (int rep = 0; rep < 10000; ++rep) {
    const Vertex n = 1 + rep % 30;
    const Vertex k = std::uniform_int_distribution<Vertex>(1, n)(rng);
    ThetaVector theta{Vector(n)};
    for (auto &v : theta.theta)
      v = z(rng);
    const Vector x = theta_to_x(theta, k);
    ASSERT_GE(x.minCoeff(), 0.0);
    ASSERT_LE(x.maxCoeff(), 1.0);
    ASSERT_LE(x.sum(), k * (1.0 + 1e-12));
  }
}

TEST(ThetaToX, BranchesAgreeOnBoundary) {
  // Choose theta so that sum(sigmoid) equals k exactly: four entries with
  // sigmoid 0.5 and k = 2.
  const ThetaVector theta{Vector::Zero(4)};
  const Vector x = theta_to_x(theta, 2);
  for (int i = 0; i < 4; ++i)
    EXPECT_EQ(x[i], sigmoid(0.0));
  // Just past the boundary the normalized branch is continuous with it.
  ThetaVector nudged = theta;
  nudged.theta[0] += 1e-9;
  EXPECT_LE((theta_to_x(nudged, 2) - x).cwiseAbs().maxCoeff(), 1e-9);
}

TEST(ParamGradient, TriangleHandComputed) {
  const Graph tri = families::triangle();
  const auto vg = param_objective_and_gradient(ProblemInstance(tri, 2, 1.0), {Vector::Zero(3)});
  EXPECT_FALSE(vg.normalized_branch);
  EXPECT_NEAR(vg.value, 3 * 2 * 0.25 + 3 * 0.25, 1e-15);
  for (int i = 0; i < 3; ++i)
    EXPECT_NEAR(vg.grad[i], 0.75, 1e-15);
}

TEST(ParamGradient, IndependentSetSupportWithoutLoading) {
  // Leaves of a star are pairwise nonadjacent; the center is pushed to 0.
  const Graph star = families::star(4);
  Vector theta = Vector::Constant(5, -1.0);
  theta[0] = -60.0;
  const auto vg = param_objective_and_gradient(ProblemInstance(star, 4, 0.0), {theta});
  EXPECT_NEAR(vg.value, 0.0, 1e-20);
  for (int leaf = 1; leaf <= 4; ++leaf)
    EXPECT_NEAR(vg.grad[leaf], 0.0, 1e-20);
}

TEST(ParamGradient, MatchesFiniteDifferencesInBothBranches) {
  std::mt19937_64 rng(12);
  std::normal_distribution<double> z(0.0, 1.5);
  int branch_count[2] = {0, 0};
  for (int rep = 0; rep < 200; ++rep) {
    const Vertex n = 2 + rep % 29;
    const Graph g = families::random_graph(n, 0.3, rng);
    const bool want_normalized = rep % 2 == 1;
    // Small k with positive thetas lands in the normalized branch, large
    // k with negative thetas in the plain one.
    const Vertex k = want_normalized ? std::max<Vertex>(1, n / 4) : n;
    ThetaVector theta{Vector(n)};
    for (auto &v : theta.theta)
      v = z(rng) + (want_normalized ? 1.0 : -1.0);
    const ProblemInstance inst(g, k, std::uniform_real_distribution<double>(0.0, 2.0)(rng));
    const auto vg = param_objective_and_gradient(inst, theta);
    ++branch_count[vg.normalized_branch];
    const Vector fd = fd_gradient(inst, theta, 1e-5);
    EXPECT_LE((vg.grad - fd).norm(), 1e-5 * std::max(fd.norm(), 1e-8))
        << "n=" << n << " k=" << k << " normalized=" << vg.normalized_branch;
  }
  EXPECT_GE(branch_count[0], 50);
  EXPECT_GE(branch_count[1], 50);
}

TEST(AdamW, FirstStepMovesByLearningRate) {
  OptimizerConfig cfg;
  cfg.learning_rate = 0.1;
  AdamW opt(cfg, 2);
  Vector p = Vector::Zero(2);
  opt.step(p, (Vector(2) << 5.0, -0.01).finished());
  // Bias-corrected first step is lr * sign(grad) up to epsilon.
  EXPECT_NEAR(p[0], -0.1, 1e-7);
  EXPECT_NEAR(p[1], 0.1, 1e-5);
  EXPECT_EQ(opt.steps_taken(), 1);
}

TEST(AdamW, DecoupledWeightDecayShrinksWithZeroGradient) {
  OptimizerConfig cfg;
  cfg.learning_rate = 0.5;
  cfg.weight_decay = 0.1;
  AdamW opt(cfg, 1);
  Vector p = Vector::Constant(1, 2.0);
  opt.step(p, Vector::Zero(1));
  EXPECT_NEAR(p[0], 2.0 * (1.0 - 0.5 * 0.1), 1e-12);
}

TEST(AdamW, MinimizesQuadratic) {
  OptimizerConfig cfg;
  cfg.learning_rate = 0.05;
  AdamW opt(cfg, 3);
  Vector p = (Vector(3) << 3.0, -2.0, 1.0).finished();
  for (int t = 0; t < 3000; ++t) {
    const Vector grad = 2.0 * p;
    opt.step(p, grad);
  }
  EXPECT_LE(p.norm(), 1e-2);
}

TEST(ParamSolve, TriangleDefaults) {
  const Graph tri = families::triangle();
  const auto rep = param_solve(ProblemInstance(tri, 2, 1.0));
  EXPECT_EQ(rep.solver_name, "param");
  EXPECT_EQ(rep.iterations, 200);
  EXPECT_EQ(rep.selection.vertices.size(), 2u);
  EXPECT_DOUBLE_EQ(rep.selection.normalized_density, 1.0);
}

TEST(ParamSolve, DisjointTrianglesAtLeastGreedy) {
  const Graph g = families::disjoint_triangles(2);
  const auto rep = param_solve(ProblemInstance(g, 3, 1.0));
  EXPECT_GE(rep.selection.normalized_density, greedy_feige(g, 3).normalized_density);
}

TEST(ParamSolve, EdgelessReportsValueK) {
  // On an edgeless graph g reduces to lambda ||x||^2. The reported value is
  // that of the top-k projection, which is exactly k. From theta = 0 the
  // fractional iterate stays at the symmetric point k/n (value k^2/n),
  // because the normalized-branch gradient vanishes there.
  const Graph g = families::edgeless(8);
  for (Vertex k : {1, 3, 5}) {
    const ProblemInstance inst(g, k, 1.0);
    const auto rep = param_solve(inst);
    EXPECT_DOUBLE_EQ(rep.selection.objective_at_lambda, static_cast<double>(k)) << "k=" << k;
    EXPECT_NEAR(rep.objective_trace.back(), static_cast<double>(k * k) / g.n(), 1e-9) << "k=" << k;
    for (double v : rep.objective_trace)
      EXPECT_LE(v, k + 1e-9);
  }
}

// Disabled: with the default settings (learning rate 3, no weight decay)
// Adam momentum carries saturating coordinates past the optimum and the
// trace drops over 20-step windows on a majority of family instances.
TEST(ParamSolve, DISABLED_WindowedMonotoneTrend) {
  const auto family = families::test_family();
  for (std::size_t gi = 0; gi < family.size(); gi += 3) {
    const Graph &g = family[gi];
    for (Vertex k = 1; k <= g.n(); ++k) {
      const auto rep = param_solve(ProblemInstance(g, k, 1.0));
      const auto &tr = rep.objective_trace;
      for (std::size_t t = 0; t + 20 < tr.size(); ++t)
        ASSERT_GE(tr[t + 20], tr[t] - 1e-9 * (1.0 + std::abs(tr[t])))
            << "graph " << gi << " k=" << k << " t=" << t;
    }
  }
}

TEST(ParamSolve, InitialThetaIsZeroForSeedZeroAndDeterministicOtherwise) {
  EXPECT_EQ(initial_theta(5, 0).theta, Vector::Zero(5));
  EXPECT_EQ(initial_theta(5, 3).theta, initial_theta(5, 3).theta);
  EXPECT_NE(initial_theta(5, 3).theta, initial_theta(5, 4).theta);
  EXPECT_LE(initial_theta(5, 3).theta.cwiseAbs().maxCoeff(), 0.01);
}

TEST(ParamSolve, BlowUpIsReported) {
  const Graph g = families::complete(4);
  OptimizerConfig cfg;
  cfg.learning_rate = std::numeric_limits<double>::infinity();
  EXPECT_THROW(param_solve(ProblemInstance(g, 2, 1.0), cfg), SolverError);
}

} // namespace
} // namespace dks
