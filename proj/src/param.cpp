#include "dks/param.hpp"

#include <chrono>
#include <cmath>
#include <random>

namespace dks {

namespace {

double sigmoid(double t) {
  if (t >= 0.0)
    return 1.0 / (1.0 + std::exp(-t));
  const double e = std::exp(t);
  return e / (1.0 + e);
}

Vector sigmoid(const Vector &theta) {
  return theta.unaryExpr([](double t) { return sigmoid(t); });
}

} // namespace

ThetaVector initial_theta(Vertex n, std::uint64_t seed) {
  ThetaVector theta{Vector::Zero(n)};
  if (seed == 0)
    return theta;
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> noise(0.0, 1e-3);
  for (Vertex i = 0; i < n; ++i)
    theta.theta[i] = noise(rng);
  return theta;
}

Vector theta_to_x(const ThetaVector &theta, Vertex k) {
  if (k < 1)
    throw std::invalid_argument("theta_to_x: k must be >= 1");
  Vector s = sigmoid(theta.theta);
  const double total = s.sum();
  if (total > k)
    s *= k / total;
  return s;
}

ValueAndGradient param_objective_and_gradient(const ProblemInstance &inst,
                                              const ThetaVector &theta) {
  if (theta.theta.size() != inst.graph.n())
    throw std::domain_error("theta length does not match vertex count");
  const Vector s = sigmoid(theta.theta);
  const double total = s.sum();
  const double k = inst.k;

  ValueAndGradient out;
  out.normalized_branch = total > k;
  const Vector x = out.normalized_branch ? Vector(s * (k / total)) : s;
  const Vector mx = loaded_matvec(inst.graph, inst.lambda, x);
  out.value = x.dot(mx);
  const Vector df = 2.0 * mx;
  const Vector ds = s.cwiseProduct((1.0 - s.array()).matrix());

  if (out.normalized_branch) {
    // J^T df with J = (k / S^2) diag(ds) (S I - 1 s^T).
    const double weighted = s.dot(df);
    out.grad = (k / (total * total)) * ds.cwiseProduct((total * df.array() - weighted).matrix());
  } else {
    out.grad = df.cwiseProduct(ds);
  }
  return out;
}

AdamW::AdamW(const OptimizerConfig &cfg, Eigen::Index n)
    : cfg_(cfg), m_(Vector::Zero(n)), v_(Vector::Zero(n)) {
  if (!(cfg.learning_rate > 0.0))
    throw std::invalid_argument("learning rate must be positive");
  if (!(cfg.beta1 >= 0.0 && cfg.beta1 < 1.0 && cfg.beta2 >= 0.0 && cfg.beta2 < 1.0))
    throw std::invalid_argument("moment decay rates must lie in [0, 1)");
}

void AdamW::step(Vector &params, const Vector &grad) {
  ++t_;
  params *= 1.0 - cfg_.learning_rate * cfg_.weight_decay;
  m_ = cfg_.beta1 * m_ + (1.0 - cfg_.beta1) * grad;
  v_ = cfg_.beta2 * v_ + (1.0 - cfg_.beta2) * grad.cwiseAbs2();
  const double c1 = 1.0 - std::pow(cfg_.beta1, t_);
  const double c2 = 1.0 - std::pow(cfg_.beta2, t_);
  params.array() -= cfg_.learning_rate * (m_.array() / c1) /
                    ((v_.array() / c2).sqrt() + cfg_.epsilon);
}

SolveReport param_solve(const ProblemInstance &inst, const OptimizerConfig &cfg,
                        std::optional<ThetaVector> theta0) {
  using clock = std::chrono::steady_clock;
  if (cfg.max_iters < 0)
    throw std::invalid_argument("max_iters must be >= 0");
  const auto t0 = clock::now();
  const Vertex n = inst.graph.n();

  ThetaVector theta = theta0 ? std::move(*theta0) : ThetaVector{Vector::Zero(n)};
  if (theta.theta.size() != n)
    throw std::domain_error("theta0 length does not match vertex count");

  AdamW opt(cfg, n);
  SolveReport rep;
  rep.solver_name = "param";
  for (int t = 0;; ++t) {
    auto vg = param_objective_and_gradient(inst, theta);
    if (!std::isfinite(vg.value) || !vg.grad.allFinite())
      throw SolverError("non-finite objective or gradient at iteration " + std::to_string(t) +
                        " (learning rate too large?)");
    rep.objective_trace.push_back(vg.value);
    if (t == cfg.max_iters)
      break;
    // Ascent on g is descent on -g.
    Vector descent = -vg.grad;
    opt.step(theta.theta, descent);
    if (!theta.theta.allFinite())
      throw SolverError("non-finite parameters after iteration " + std::to_string(t + 1));
    ++rep.iterations;
  }
  const auto t1 = clock::now();

  rep.final_point = FractionalPoint{theta_to_x(theta, inst.k)};
  rep.integral = rep.final_point.integral();
  // No stopping rule of its own; report first-order stationarity on C_k^n.
  rep.final_gap = fw_gap(inst, rep.final_point.x);
  rep.converged = rep.final_gap <= 1e-8 * (1.0 + std::abs(rep.objective_trace.back()));
  rep.selection = make_selection(inst.graph, top_k_indices(rep.final_point.x, inst.k), inst.lambda);
  rep.iteration_time = std::chrono::duration<double>(t1 - t0).count();
  rep.wall_time = rep.iteration_time;
  return rep;
}

} // namespace dks
