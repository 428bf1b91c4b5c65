#pragma once

#include <optional>

#include "dks/fw.hpp"

namespace dks {

/// Coordinates with min(x, 1 - x) above this are fractional.
inline constexpr double kFractionalThreshold = 1e-9;

/// One mass transfer x <- x + delta (e_i - e_j) between fractional coordinates.
struct RoundingStep {
  Vertex i = -1;      ///< receiving coordinate, largest lambda x_i + s_i
  Vertex j = -1;      ///< donating coordinate, smallest lambda x_j + s_j
  double delta = 0.0; ///< min{x_j, 1 - x_i}
  double score_i = 0.0;
  double score_j = 0.0;
  bool adjacent = false;
};

/// The transfer the rounding procedure would apply next, or nothing when
/// fewer than two coordinates are fractional.
std::optional<RoundingStep> next_rounding_step(const ProblemInstance &inst, const Vector &x);

/// Applies `step` to x (without snapping).
void apply_rounding_step(Vector &x, const RoundingStep &step);

/// Rounds a feasible point of the capped simplex to an integral one without
/// decreasing g. Requires lambda >= 1; throws std::invalid_argument
/// otherwise and std::domain_error for infeasible x.
FractionalPoint round_to_integral(const ProblemInstance &inst, const FractionalPoint &x);

/// The k largest entries (lowest index on ties) as a selection.
VertexSelection project_top_k(const Graph &g, const Vector &x, Vertex k, double lambda = 1.0);

} // namespace dks
