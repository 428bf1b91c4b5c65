#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dks/graph.hpp"
#include "dks/linalg.hpp"
#include "dks/selection.hpp"

namespace dks {

/// A point of the capped simplex {x in [0,1]^n : sum x = k}.
struct FractionalPoint {
  Vector x;

  /// Checks bounds (1e-12 slack) and the budget (1e-9 k slack).
  bool feasible(Vertex k) const;
  /// True when every coordinate is within `tol` of 0 or 1.
  bool integral(double tol = 1e-9) const;

  static FractionalPoint uniform(Vertex n, Vertex k);
  static FractionalPoint indicator(Vertex n, const std::vector<Vertex> &support);
};

enum class StepRule { OptionI, OptionII };

struct FwConfig {
  StepRule step_rule = StepRule::OptionI;
  int max_iters = 1000;
  /// Stop once the FW gap drops to gap_tol * (1 + |g(x)|).
  double gap_tol = 1e-8;
  /// Re-check feasibility after every update (throws SolverError).
  bool validate_iterates = false;
  PowerOptions power;
};

struct SolveReport {
  std::string solver_name;
  std::vector<double> objective_trace;
  int iterations = 0;
  bool converged = false;
  bool integral = false;
  double final_gap = 0.0;
  FractionalPoint final_point;
  VertexSelection selection;
  double wall_time = 0.0;      ///< whole solve, including setup such as L
  double iteration_time = 0.0; ///< main loop only
};

/// g(x) = x^T (A + lambda I) x, each edge contributing twice.
template <typename Derived>
typename Derived::Scalar objective(const ProblemInstance &inst, const Eigen::MatrixBase<Derived> &x) {
  return x.dot(loaded_matvec(inst.graph, static_cast<typename Derived::Scalar>(inst.lambda), x));
}

inline double objective(const ProblemInstance &inst, const FractionalPoint &p) {
  return objective(inst, p.x);
}

/// Vertex of the capped simplex maximizing gradient^T s: ones on the top k.
FractionalPoint lmp_top_k(const Vector &gradient, Vertex k);

/// Frank-Wolfe ascent on the capped simplex. Starts from k/n uniform when
/// no start is given. The report's selection is the top-k projection of the
/// final iterate.
SolveReport fw_solve(const ProblemInstance &inst, const FwConfig &cfg = {},
                     std::optional<FractionalPoint> x0 = std::nullopt);

/// FW gap max_s grad^T (s - x) at x, with grad = (A + lambda I) x.
double fw_gap(const ProblemInstance &inst, const Vector &x);

} // namespace dks
