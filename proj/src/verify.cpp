#include "dks/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "dks/oracle.hpp"
#include "dks/rounding.hpp"

namespace dks::verify {

std::string describe_instance(const Graph &g, Vertex k, double lambda, const Vector *x) {
  std::ostringstream out;
  out.precision(17);
  out << "n=" << g.n() << " m=" << g.m() << " k=" << k << " lambda=" << lambda << "\nedges:";
  for (auto [u, v] : g.edges())
    out << ' ' << u << '-' << v;
  if (x) {
    out << "\nx:";
    for (Eigen::Index i = 0; i < x->size(); ++i)
      out << ' ' << (*x)[i];
  }
  return out.str();
}

Vector random_feasible_point(Vertex n, Vertex k, std::mt19937_64 &rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::uniform_real_distribution<double> spread(0.2, 3.0);
  const double s = spread(rng);
  Vector v(n);
  for (Vertex i = 0; i < n; ++i)
    v[i] = s * u(rng);
  return oracle::project_to_capped_simplex(v, k);
}

double best_fw_multistart(const ProblemInstance &inst, const FwConfig &cfg) {
  const Vertex n = inst.graph.n();
  const Vertex k = inst.k;
  double best = -std::numeric_limits<double>::infinity();
  auto consider = [&](const FractionalPoint &x0) {
    const auto rep = fw_solve(inst, cfg, x0);
    best = std::max(best, rep.selection.objective_at_lambda);
    if (inst.lambda >= 1.0)
      best = std::max(best, objective(inst, round_to_integral(inst, rep.final_point)));
  };
  consider(FractionalPoint::uniform(n, k));
  if (k < n) {
    const double base = static_cast<double>(k) / n;
    const double eps = 0.5 * std::min((1.0 - base) / (1.0 - 1.0 / n), static_cast<double>(k));
    for (Vertex j = 0; j < n; ++j) {
      FractionalPoint x0{Vector::Constant(n, base - eps / n)};
      x0.x[j] += eps;
      consider(x0);
    }
  }
  return best;
}

SuiteResult motzkin_suite(const std::vector<Graph> &family, const MotzkinOptions &opts) {
  SuiteResult res;
  res.name = "motzkin";
  double worst_gap = 0.0;
  for (std::size_t gi = 0; gi < family.size(); ++gi) {
    const Graph &g = family[gi];
    const auto clique = oracle::maximum_clique(g);
    const double omega = static_cast<double>(clique.size());
    Vector uniform = Vector::Zero(g.n());
    for (Vertex v : clique)
      uniform[v] = 1.0 / omega;
    for (double lambda : opts.lambdas) {
      const ProblemInstance inst(g, 1, lambda);
      const double closed = 1.0 + (lambda - 1.0) / omega;
      const double at_clique = objective(inst, uniform);
      const auto best = oracle::simplex_qp_max(g, lambda, 1.0, opts.restarts, opts.seed + gi);
      ++res.checks;
      worst_gap = std::max(worst_gap, std::abs(best.value - closed));
      if (std::abs(at_clique - closed) > opts.attain_tol)
        res.fail("clique point value " + std::to_string(at_clique) + " != " +
                 std::to_string(closed) + "\n" + describe_instance(g, 1, lambda, &uniform));
      if (best.value < closed - opts.below_tol || best.value > closed + opts.above_tol)
        res.fail("simplex maximum " + std::to_string(best.value) + " vs closed form " +
                 std::to_string(closed) + "\n" + describe_instance(g, 1, lambda, &best.point));
    }
  }
  std::ostringstream s;
  s << res.checks << " (graph, lambda) pairs; max |oracle - closed form| = " << worst_gap;
  res.summary = s.str();
  return res;
}

SuiteResult rounding_suite(const RoundingOptions &opts) {
  SuiteResult res;
  res.name = "rounding";
  std::mt19937_64 rng(opts.seed);
  std::uniform_int_distribution<Vertex> size(2, opts.max_n);
  std::uniform_real_distribution<double> density(0.05, 0.9);
  std::uniform_int_distribution<std::size_t> which(0, opts.lambdas.size() - 1);
  constexpr int points_per_graph = 20;
  double min_gain = std::numeric_limits<double>::infinity();
  for (int done = 0; done < opts.points;) {
    const Graph g = families::random_graph(size(rng), density(rng), rng);
    for (int r = 0; r < points_per_graph && done < opts.points; ++r, ++done) {
      const Vertex k = std::uniform_int_distribution<Vertex>(1, g.n())(rng);
      const ProblemInstance inst(g, k, opts.lambdas[which(rng)]);
      const FractionalPoint x{random_feasible_point(g.n(), k, rng)};
      const auto rounded = round_to_integral(inst, x);
      const double before = objective(inst, x);
      const double after = objective(inst, rounded);
      ++res.checks;
      min_gain = std::min(min_gain, after - before);
      if (after < before - opts.slack * (1.0 + std::abs(before)))
        res.fail("rounding decreased g from " + std::to_string(before) + " to " +
                 std::to_string(after) + "\n" + describe_instance(g, k, inst.lambda, &x.x));
      if (!rounded.integral(0.0) || std::llround(rounded.x.sum()) != k ||
          rounded.x.sum() != static_cast<double>(k))
        res.fail("rounded point is not integral/feasible\n" +
                 describe_instance(g, k, inst.lambda, &x.x));
    }
  }
  std::ostringstream s;
  s << res.checks << " random points; smallest g(rounded) - g(x) = " << min_gain;
  res.summary = s.str();
  return res;
}

SuiteResult tightness_suite(const std::vector<Graph> &family, const TightnessOptions &opts) {
  SuiteResult res;
  res.name = "tightness";
  std::mt19937_64 rng(opts.seed);
  std::size_t graphs = 0;
  for (const Graph &g : family) {
    if (g.n() > opts.max_n)
      continue;
    ++graphs;
    for (Vertex k = 1; k <= g.n(); ++k) {
      const ProblemInstance inst(g, k, 1.0);
      const double exact = oracle::exact_dks(g, k, 1.0).value;
      double best = best_fw_multistart(inst);
      for (int r = 0; r < opts.random_points; ++r) {
        const FractionalPoint x{random_feasible_point(g.n(), k, rng)};
        best = std::max(best, objective(inst, round_to_integral(inst, x)));
      }
      ++res.checks;
      if (best > exact + opts.tol)
        res.fail("rounded value " + std::to_string(best) + " exceeds exhaustive optimum " +
                 std::to_string(exact) + "\n" + describe_instance(g, k, 1.0));
      else if (best < exact - opts.tol)
        res.fail("best rounded value " + std::to_string(best) + " misses exhaustive optimum " +
                 std::to_string(exact) + "\n" + describe_instance(g, k, 1.0));
    }
  }
  std::ostringstream s;
  s << res.checks << " (graph, k) instances over " << graphs << " graphs at lambda=1";
  res.summary = s.str();
  return res;
}

SuiteResult relaxation_gap_suite(const std::vector<Graph> &family, const GapOptions &opts) {
  SuiteResult res;
  res.name = "relaxation-gap";
  double min_gap = std::numeric_limits<double>::infinity();
  for (std::size_t gi = 0; gi < family.size(); ++gi) {
    const Graph &g = family[gi];
    const Vertex omega = oracle::max_clique_size(g);
    for (Vertex k = 1; k < omega; ++k) {
      for (double lambda : opts.lambdas) {
        const double kk = k;
        const double relaxed_closed = kk * kk + kk * kk * (lambda - 1.0) / omega;
        const double integral_closed = kk * (kk + lambda - 1.0);
        const double exact = oracle::exact_dks(g, k, lambda).value;
        const auto relaxed = oracle::simplex_qp_max(g, lambda, kk, opts.restarts, opts.seed + gi);
        ++res.checks;
        min_gap = std::min(min_gap, relaxed.value - exact);
        if (relaxed.value < relaxed_closed - opts.tol)
          res.fail("scaled-simplex maximum " + std::to_string(relaxed.value) + " below " +
                   std::to_string(relaxed_closed) + "\n" +
                   describe_instance(g, k, lambda, &relaxed.point));
        if (std::abs(exact - integral_closed) > 1e-9)
          res.fail("integral optimum " + std::to_string(exact) + " != k(k+lambda-1) = " +
                   std::to_string(integral_closed) + "\n" + describe_instance(g, k, lambda));
        if (!(relaxed.value > exact))
          res.fail("no relaxation gap\n" + describe_instance(g, k, lambda, &relaxed.point));
      }
    }
  }
  std::ostringstream s;
  s << res.checks << " (graph, k<omega, lambda) instances; smallest relaxed - integral = " << min_gap;
  res.summary = s.str();
  return res;
}

SuiteResult landscape_suite(const LandscapeOptions &opts) {
  SuiteResult res;
  res.name = "landscape";
  std::mt19937_64 rng(opts.seed);
  std::uniform_int_distribution<Vertex> size(3, opts.max_n);
  std::uniform_real_distribution<double> density(0.1, 0.9);
  std::uniform_real_distribution<double> interior(0.05, 0.95);
  std::size_t edge_cases = 0;
  double min_margin = std::numeric_limits<double>::infinity();
  while (static_cast<int>(res.checks) < opts.points) {
    const Graph g = families::random_graph(size(rng), density(rng), rng);
    const Vertex n = g.n();
    // Two or more interior coordinates; the rest 0/1 with an integral budget.
    const Vertex frac = std::uniform_int_distribution<Vertex>(2, n)(rng);
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), Vertex{0});
    std::shuffle(order.begin(), order.end(), rng);
    Vector x = Vector::Zero(n);
    double mass = 0.0;
    for (Vertex i = 0; i < frac; ++i)
      mass += x[order[i]] = interior(rng);
    // Rescale the fractional block to an integer sum when possible.
    const double target = std::max(1.0, std::round(mass));
    const double scale = target / mass;
    bool ok = true;
    for (Vertex i = 0; i < frac; ++i) {
      x[order[i]] *= scale;
      ok = ok && x[order[i]] > 0.01 && x[order[i]] < 0.99;
    }
    if (!ok)
      continue;
    Vertex ones = 0;
    for (Vertex i = frac; i < n; ++i)
      if (std::bernoulli_distribution(0.3)(rng)) {
        x[order[i]] = 1.0;
        ++ones;
      }
    const auto k = static_cast<Vertex>(std::llround(target)) + ones;
    const ProblemInstance inst(g, k, opts.lambda);
    if (!FractionalPoint{x}.feasible(k))
      continue;
    const auto step = next_rounding_step(inst, x);
    if (!step)
      continue;
    Vector y = x;
    apply_rounding_step(y, *step);
    const double gain = objective(inst, y) - objective(inst, x);
    const double d2 = step->delta * step->delta;
    const double bound = step->adjacent ? 2.0 * (opts.lambda - 1.0) * d2 : 2.0 * opts.lambda * d2;
    edge_cases += step->adjacent;
    ++res.checks;
    min_margin = std::min(min_margin, gain - bound);
    if (!(gain > 0.0) || gain < bound - opts.slack)
      res.fail("rounding step gained " + std::to_string(gain) + ", expected at least " +
               std::to_string(bound) + (step->adjacent ? " (edge case)" : " (non-edge case)") +
               "\n" + describe_instance(g, k, opts.lambda, &x));
  }
  std::ostringstream s;
  s << res.checks << " non-integral points (" << edge_cases
    << " edge-case steps); smallest gain - bound = " << min_margin;
  res.summary = s.str();
  return res;
}

} // namespace dks::verify
