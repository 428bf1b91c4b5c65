#pragma once

#include <cstdint>
#include <optional>

#include "dks/fw.hpp"

namespace dks {

/// Free variables of the sigmoid/budget parameterization.
struct ThetaVector {
  Vector theta;
};

/// Decoupled weight-decay adaptive-moment settings (AdamW).
struct OptimizerConfig {
  double learning_rate = 3.0;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;
  double weight_decay = 0.0;
  int max_iters = 200;
};

/// Start point for param_solve: zero for seed 0, otherwise small seeded
/// Gaussian noise (scale 1e-3) that breaks the symmetry of theta = 0.
ThetaVector initial_theta(Vertex n, std::uint64_t seed);

/// x_i = sigma(theta_i) / (1 + max{sum(sigma)/k - 1, 0}); lands in
/// {x in [0,1]^n : sum x <= k}.
Vector theta_to_x(const ThetaVector &theta, Vertex k);

struct ValueAndGradient {
  double value = 0.0;
  Vector grad;
  bool normalized_branch = false;
};

/// g(theta_to_x(theta)) and its gradient in theta. The normalized branch
/// uses the rank-one Jacobian structure, so the cost is O(m + n). At
/// sum(sigma) == k exactly the plain-sigmoid formula is used.
ValueAndGradient param_objective_and_gradient(const ProblemInstance &inst, const ThetaVector &theta);

/// AdamW state for a single parameter vector; `step` applies one
/// descent update with a given gradient.
class AdamW {
public:
  AdamW(const OptimizerConfig &cfg, Eigen::Index n);

  void step(Vector &params, const Vector &grad);
  int steps_taken() const noexcept { return t_; }

private:
  OptimizerConfig cfg_;
  Vector m_;
  Vector v_;
  int t_ = 0;
};

/// Gradient ascent on the parameterized objective. Default start theta = 0.
/// The report's objective trace is on the x scale and the selection is the
/// top-k projection of the final x. Throws SolverError on non-finite values.
SolveReport param_solve(const ProblemInstance &inst, const OptimizerConfig &cfg = {},
                        std::optional<ThetaVector> theta0 = std::nullopt);

} // namespace dks
