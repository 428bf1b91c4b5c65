#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dks/families.hpp"
#include "dks/fw.hpp"

namespace dks::verify {

struct SuiteResult {
  std::string name;
  bool passed = true;
  std::size_t checks = 0;
  std::string summary;
  std::string failure; ///< first failing instance (edge list, k, lambda, x)

  void fail(std::string what) {
    if (passed)
      failure = std::move(what);
    passed = false;
  }
};

/// Text block describing an instance for failure reports.
std::string describe_instance(const Graph &g, Vertex k, double lambda, const Vector *x = nullptr);

/// Uniform-random feasible point of the capped simplex (random vector
/// projected onto it).
Vector random_feasible_point(Vertex n, Vertex k, std::mt19937_64 &rng);

/// Best integral objective reachable by Frank-Wolfe from the uniform start
/// and n single-vertex-tilted starts, each final point rounded (lambda >= 1)
/// and top-k projected.
double best_fw_multistart(const ProblemInstance &inst, const FwConfig &cfg = {});

struct MotzkinOptions {
  std::vector<double> lambdas{0.0, 0.25, 0.5, 0.75, 1.0};
  int restarts = 8;
  std::uint64_t seed = 0;
  double below_tol = 1e-6;  ///< oracle may undershoot the closed form by this
  double above_tol = 1e-9;  ///< and must never exceed it by more
  double attain_tol = 1e-12;
};

/// Simplex maximum of x^T (A + lambda I) x equals 1 + (lambda - 1)/omega,
/// attained by the uniform point on a maximum clique.
SuiteResult motzkin_suite(const std::vector<Graph> &family, const MotzkinOptions &opts = {});

struct RoundingOptions {
  int points = 10000;
  Vertex max_n = 50;
  std::vector<double> lambdas{1.0, 1.5, 2.0};
  std::uint64_t seed = 0;
  double slack = 1e-9;
};

/// round_to_integral never decreases g and ends integral and feasible.
SuiteResult rounding_suite(const RoundingOptions &opts = {});

struct TightnessOptions {
  Vertex max_n = 10;
  int random_points = 200;
  std::uint64_t seed = 0;
  double tol = 1e-9;
};

/// At lambda = 1 the best rounded value over FW multi-start and random
/// fractional points equals the exhaustive optimum and never exceeds it.
SuiteResult tightness_suite(const std::vector<Graph> &family, const TightnessOptions &opts = {});

struct GapOptions {
  std::vector<double> lambdas{0.0, 0.5};
  int restarts = 4;
  std::uint64_t seed = 0;
  double tol = 1e-6;
};

/// Below lambda = 1 and for k < omega, the scaled-simplex relaxation exceeds
/// the integral optimum k(k + lambda - 1) strictly.
SuiteResult relaxation_gap_suite(const std::vector<Graph> &family, const GapOptions &opts = {});

struct LandscapeOptions {
  int points = 1000;
  double lambda = 1.5;
  Vertex max_n = 30;
  std::uint64_t seed = 0;
  double slack = 1e-9;
};

/// For lambda > 1 one rounding step from a non-integral point gains at least
/// 2(lambda-1) delta^2 across an edge and 2 lambda delta^2 otherwise.
SuiteResult landscape_suite(const LandscapeOptions &opts = {});

} // namespace dks::verify
