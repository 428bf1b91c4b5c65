#include "dks/fw.hpp"

#include <chrono>
#include <cmath>

namespace dks {

bool FractionalPoint::feasible(Vertex k) const {
  constexpr double slack = 1e-12;
  for (Eigen::Index i = 0; i < x.size(); ++i)
    if (!(x[i] >= -slack && x[i] <= 1.0 + slack))
      return false;
  return std::abs(x.sum() - k) <= 1e-9 * std::max<double>(k, 1.0);
}

bool FractionalPoint::integral(double tol) const {
  for (Eigen::Index i = 0; i < x.size(); ++i)
    if (std::min(std::abs(x[i]), std::abs(1.0 - x[i])) > tol)
      return false;
  return true;
}

FractionalPoint FractionalPoint::uniform(Vertex n, Vertex k) {
  return {Vector::Constant(n, static_cast<double>(k) / n)};
}

FractionalPoint FractionalPoint::indicator(Vertex n, const std::vector<Vertex> &support) {
  FractionalPoint p{Vector::Zero(n)};
  for (Vertex v : support)
    p.x[v] = 1.0;
  return p;
}

FractionalPoint lmp_top_k(const Vector &gradient, Vertex k) {
  return FractionalPoint::indicator(static_cast<Vertex>(gradient.size()),
                                    top_k_indices(gradient, k));
}

double fw_gap(const ProblemInstance &inst, const Vector &x) {
  const Vector grad = loaded_matvec(inst.graph, inst.lambda, x);
  const auto s = lmp_top_k(grad, inst.k);
  return grad.dot(s.x - x);
}

SolveReport fw_solve(const ProblemInstance &inst, const FwConfig &cfg,
                     std::optional<FractionalPoint> x0) {
  using clock = std::chrono::steady_clock;
  if (cfg.max_iters < 1)
    throw std::invalid_argument("max_iters must be >= 1");
  if (!(cfg.gap_tol >= 0.0))
    throw std::invalid_argument("gap_tol must be >= 0");

  const auto t0 = clock::now();
  const Graph &g = inst.graph;
  const Vertex n = g.n();
  const Vertex k = inst.k;

  FractionalPoint point = x0 ? std::move(*x0) : FractionalPoint::uniform(n, k);
  if (point.x.size() != n || !point.feasible(k))
    throw std::domain_error("Frank-Wolfe start point is not feasible");

  const double L = spectral_norm(g, inst.lambda, cfg.power).value;

  SolveReport rep;
  rep.solver_name = "fw";
  const auto t1 = clock::now();
  Vector grad(n);
  Vector d(n);
  Vector &x = point.x;
  for (int t = 0;; ++t) {
    loaded_matvec_into(g, inst.lambda, x, grad);
    const double value = x.dot(grad);
    rep.objective_trace.push_back(value);

    const auto s = top_k_indices(grad, k);
    d = -x;
    for (Vertex v : s)
      d[v] += 1.0;
    const double gap = grad.dot(d);
    rep.final_gap = gap;

    const double scale = 1.0 + std::abs(value);
    if (gap < -1e-9 * scale)
      throw SolverError("negative Frank-Wolfe gap " + std::to_string(gap) +
                        " (linear maximization step is inconsistent)");
    const double dd = d.squaredNorm();
    if (dd == 0.0 || gap <= cfg.gap_tol * scale) {
      rep.converged = true;
      break;
    }
    if (t == cfg.max_iters)
      break;
    if (!(L > 0.0))
      throw std::invalid_argument("Lipschitz estimate is not positive but the gradient is nonzero");

    double gamma = cfg.step_rule == StepRule::OptionI ? gap / (L * dd) : gap / (2.0 * k * L);
    gamma = std::min(1.0, gamma);
    if (gamma == 1.0) {
      // Land exactly on the vertex instead of accumulating x + (s - x).
      x.setZero();
      for (Vertex v : s)
        x[v] = 1.0;
    } else {
      x += gamma * d;
    }
    ++rep.iterations;

    if (cfg.validate_iterates && !point.feasible(k))
      throw SolverError("Frank-Wolfe iterate left the feasible set at iteration " +
                        std::to_string(rep.iterations));
  }
  const auto t2 = clock::now();

  rep.integral = point.integral();
  rep.selection = make_selection(g, top_k_indices(x, k), inst.lambda);
  rep.final_point = std::move(point);
  rep.iteration_time = std::chrono::duration<double>(t2 - t1).count();
  rep.wall_time = std::chrono::duration<double>(clock::now() - t0).count();
  return rep;
}

} // namespace dks
