// Command-line front end: solve, sweep, verify and score.
//
// Exit codes: 0 success, 1 verify failure, 2 bad flags or arguments,
// 3 input/output problems, 4 solver failure.

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "dks/baselines.hpp"
#include "dks/fw.hpp"
#include "dks/graph.hpp"
#include "dks/metrics.hpp"
#include "dks/param.hpp"
#include "dks/verify.hpp"

namespace {

constexpr int kExitVerify = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;
constexpr int kExitSolver = 4;

/// Carries an exit code out of a subcommand.
struct Exit {
  int code;
  std::string message;
};

[[noreturn]] void fail(int code, std::string message) { throw Exit{code, std::move(message)}; }

dks::Graph load_graph(const std::string &path) {
  try {
    return dks::load_edge_list(path);
  } catch (const dks::ParseError &e) {
    fail(kExitIo, path + ": line " + std::to_string(e.line()) + ": " + e.what());
  } catch (const std::exception &e) {
    fail(kExitIo, path + ": " + e.what());
  }
}

std::vector<std::string> split_list(const std::string &text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');)
    if (!item.empty())
      out.push_back(item);
  return out;
}

std::vector<dks::Vertex> parse_k_list(const std::string &text, dks::Vertex n) {
  std::vector<dks::Vertex> ks;
  for (const auto &item : split_list(text)) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception &) {
      used = 0;
    }
    if (used != item.size())
      fail(kExitUsage, "--k-list: '" + item + "' is not an integer");
    if (v < 2 || v > n)
      fail(kExitUsage, "--k-list: k=" + item + " outside [2, n=" + std::to_string(n) + "]");
    ks.push_back(static_cast<dks::Vertex>(v));
  }
  if (ks.empty())
    fail(kExitUsage, "--k-list is empty");
  std::sort(ks.begin(), ks.end());
  ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
  return ks;
}

nlohmann::ordered_json labels_json(const dks::Graph &g, const std::vector<dks::Vertex> &vertices) {
  auto arr = nlohmann::ordered_json::array();
  for (dks::Vertex v : vertices)
    arr.push_back(g.label(v));
  return arr;
}

// ---------------------------------------------------------------- solve

struct SolveArgs {
  std::string graph;
  long long k = 0;
  double lambda = 1.0;
  std::string solver = "fw";
  std::string step_rule = "option1";
  int max_iters = -1;
  double gap_tol = 1e-8;
  double lr = 3.0;
  std::uint64_t seed = 0;
  std::string output = "text";
};

int run_solve(const SolveArgs &a) {
  const dks::Graph g = load_graph(a.graph);
  if (a.k < 1 || a.k > g.n())
    fail(kExitUsage, "--k must lie in [1, n=" + std::to_string(g.n()) + "], got " +
                         std::to_string(a.k));
  const auto k = static_cast<dks::Vertex>(a.k);
  if ((a.solver == "greedy") && k < 2)
    fail(kExitUsage, "--solver greedy needs k >= 2");

  struct Result {
    dks::VertexSelection selection;
    int iterations = 0;
    bool integral = true;
    bool converged = true;
    double final_gap = 0.0;
    double wall_time = 0.0;
  } r;

  try {
    const dks::ProblemInstance inst(g, k, a.lambda);
    const auto t0 = std::chrono::steady_clock::now();
    if (a.solver == "fw" || a.solver == "param") {
      dks::SolveReport rep;
      if (a.solver == "fw") {
        dks::FwConfig cfg;
        cfg.step_rule = a.step_rule == "option2" ? dks::StepRule::OptionII : dks::StepRule::OptionI;
        if (a.max_iters >= 0)
          cfg.max_iters = a.max_iters;
        cfg.gap_tol = a.gap_tol;
        rep = dks::fw_solve(inst, cfg);
      } else {
        dks::OptimizerConfig cfg;
        cfg.learning_rate = a.lr;
        if (a.max_iters >= 0)
          cfg.max_iters = a.max_iters;
        rep = dks::param_solve(inst, cfg, dks::initial_theta(g.n(), a.seed));
      }
      r.selection = rep.selection;
      r.iterations = rep.iterations;
      r.integral = rep.integral;
      r.converged = rep.converged;
      r.final_gap = rep.final_gap;
    } else {
      r.selection = a.solver == "greedy" ? dks::greedy_feige(g, k) : dks::rank1_lrbo(g, k);
    }
    r.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  } catch (const std::invalid_argument &e) {
    fail(kExitUsage, e.what());
  } catch (const std::exception &e) {
    fail(kExitSolver, std::string("solver failed: ") + e.what());
  }

  if (a.output == "json") {
    nlohmann::ordered_json j;
    j["graph"] = a.graph;
    j["n"] = g.n();
    j["m"] = g.m();
    j["k"] = k;
    j["lambda"] = a.lambda;
    j["solver"] = a.solver;
    j["vertices"] = labels_json(g, r.selection.vertices);
    j["induced_edges"] = r.selection.induced_edges;
    j["normalized_density"] = r.selection.normalized_density;
    j["objective"] = r.selection.objective_at_lambda;
    j["iterations"] = r.iterations;
    j["integral"] = r.integral;
    j["converged"] = r.converged;
    j["final_gap"] = r.final_gap;
    j["wall_time_s"] = r.wall_time;
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "vertices:";
    for (dks::Vertex v : r.selection.vertices)
      std::cout << ' ' << g.label(v);
    std::cout << "\nk: " << k << "\ninduced_edges: " << r.selection.induced_edges
              << "\nnormalized_density: " << r.selection.normalized_density
              << "\nobjective: " << r.selection.objective_at_lambda
              << "\niterations: " << r.iterations << "\nintegral: " << std::boolalpha
              << r.integral << "\nconverged: " << r.converged << "\nwall_time_s: " << r.wall_time
              << '\n';
  }
  return 0;
}

// ---------------------------------------------------------------- sweep

struct SweepArgs {
  std::string graph;
  std::string k_list;
  std::string solvers;
  std::string out;
  std::string format = "csv";
  std::string dataset;
  double lambda = 1.0;
  std::uint64_t seed = 0;
  unsigned jobs = 0;
};

int run_sweep(const SweepArgs &a) {
  const auto solvers = split_list(a.solvers);
  if (solvers.empty())
    fail(kExitUsage, "--solvers is empty");
  for (const auto &s : solvers)
    if (std::find(dks::known_solvers().begin(), dks::known_solvers().end(), s) ==
        dks::known_solvers().end())
      fail(kExitUsage, "unknown solver '" + s + "' (expected fw, param, greedy or rank1)");
  const dks::Graph g = load_graph(a.graph);
  const auto ks = parse_k_list(a.k_list, g.n());

  dks::SweepOptions opts;
  opts.dataset = a.dataset.empty() ? std::filesystem::path(a.graph).stem().string() : a.dataset;
  opts.lambda = a.lambda;
  opts.seed = a.seed;
  opts.jobs = a.jobs > 0 ? a.jobs : dks::default_jobs();
  std::vector<dks::ExperimentRecord> records;
  try {
    records = dks::run_sweep(g, ks, solvers, opts);
  } catch (const std::invalid_argument &e) {
    fail(kExitUsage, e.what());
  } catch (const std::exception &e) {
    fail(kExitSolver, std::string("sweep failed: ") + e.what());
  }
  try {
    dks::write_report(records, a.out,
                      a.format == "json" ? dks::ReportFormat::Json : dks::ReportFormat::Csv);
  } catch (const std::exception &e) {
    fail(kExitIo, a.out + ": " + e.what());
  }
  std::size_t failed = 0;
  for (const auto &r : records)
    failed += r.failed();
  std::cerr << records.size() << " records written to " << a.out;
  if (failed)
    std::cerr << " (" << failed << " failed cells)";
  std::cerr << '\n';
  return failed ? kExitSolver : 0;
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
  int max_n = 8;
  std::uint64_t seed = 0;
  std::string suite = "all";
};

int run_verify(const VerifyArgs &a) {
  dks::families::FamilySpec spec;
  spec.exhaustive_max_n = std::min(a.max_n, 6);
  spec.random_max_n = a.max_n;
  spec.random_count = a.max_n >= spec.random_min_n ? 50 : 0;
  spec.seed = a.seed;
  const auto family = dks::families::test_family(spec);

  std::vector<dks::verify::SuiteResult> results;
  const bool all = a.suite == "all";
  if (all || a.suite == "motzkin") {
    dks::verify::MotzkinOptions o;
    o.seed = a.seed;
    results.push_back(dks::verify::motzkin_suite(family, o));
  }
  if (all || a.suite == "rounding") {
    dks::verify::RoundingOptions o;
    o.seed = a.seed;
    results.push_back(dks::verify::rounding_suite(o));
  }
  if (all || a.suite == "tightness") {
    dks::verify::TightnessOptions t;
    t.seed = a.seed;
    results.push_back(dks::verify::tightness_suite(family, t));
    dks::verify::GapOptions o;
    o.seed = a.seed;
    results.push_back(dks::verify::relaxation_gap_suite(family, o));
  }
  if (all || a.suite == "landscape") {
    dks::verify::LandscapeOptions o;
    o.seed = a.seed;
    results.push_back(dks::verify::landscape_suite(o));
  }

  bool ok = true;
  for (const auto &r : results) {
    std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.summary << '\n';
    if (!r.passed)
      std::cout << "failing instance:\n" << r.failure << '\n';
    ok = ok && r.passed;
  }
  return ok ? 0 : kExitVerify;
}

// ---------------------------------------------------------------- score

struct ScoreArgs {
  std::string graph;
  std::string selection;
  double lambda = 1.0;
  std::string name = "external";
  std::string dataset;
  std::string output = "text";
};

int run_score(const ScoreArgs &a) {
  const dks::Graph g = load_graph(a.graph);
  std::vector<dks::Vertex> vertices;
  try {
    vertices = dks::load_selection_file(g, a.selection);
  } catch (const std::exception &e) {
    fail(kExitIo, a.selection + ": " + e.what());
  }
  dks::ExperimentRecord rec;
  try {
    const std::string dataset =
        a.dataset.empty() ? std::filesystem::path(a.graph).stem().string() : a.dataset;
    rec = dks::score_selection(g, vertices, a.name, dataset, a.lambda);
  } catch (const std::exception &e) {
    fail(kExitUsage, e.what());
  }
  std::cout << dks::format_report({rec}, a.output == "json" ? dks::ReportFormat::Json
                                                              : dks::ReportFormat::Csv);
  return 0;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Densest k-subgraph solvers and theory checks"};
  app.require_subcommand(1);

  const std::vector<std::string> solver_names = dks::known_solvers();

  SolveArgs solve;
  auto *solve_cmd = app.add_subcommand("solve", "Solve one instance");
  solve_cmd->add_option("--graph", solve.graph, "Edge list (optionally .gz)")->required();
  solve_cmd->add_option("--k", solve.k, "Subgraph size")->required();
  solve_cmd->add_option("--lambda", solve.lambda, "Diagonal loading")
      ->check(CLI::NonNegativeNumber);
  solve_cmd->add_option("--solver", solve.solver)->check(CLI::IsMember(solver_names));
  solve_cmd->add_option("--step-rule", solve.step_rule)
      ->check(CLI::IsMember({"option1", "option2"}));
  solve_cmd->add_option("--max-iters", solve.max_iters)->check(CLI::NonNegativeNumber);
  solve_cmd->add_option("--gap-tol", solve.gap_tol)->check(CLI::NonNegativeNumber);
  solve_cmd->add_option("--lr", solve.lr)->check(CLI::PositiveNumber);
  solve_cmd->add_option("--seed", solve.seed);
  solve_cmd->add_option("--output", solve.output)->check(CLI::IsMember({"text", "json"}));

  SweepArgs sweep;
  auto *sweep_cmd = app.add_subcommand("sweep", "Run solvers over a list of k");
  sweep_cmd->add_option("--graph", sweep.graph)->required();
  sweep_cmd->add_option("--k-list", sweep.k_list, "Comma separated k values")->required();
  sweep_cmd->add_option("--solvers", sweep.solvers, "Comma separated solver names")->required();
  sweep_cmd->add_option("--out", sweep.out)->required();
  sweep_cmd->add_option("--format", sweep.format)->check(CLI::IsMember({"csv", "json"}));
  sweep_cmd->add_option("--dataset", sweep.dataset, "Dataset name (default: file stem)");
  sweep_cmd->add_option("--lambda", sweep.lambda)->check(CLI::NonNegativeNumber);
  sweep_cmd->add_option("--seed", sweep.seed);
  sweep_cmd->add_option("--jobs", sweep.jobs, "Worker threads (default: DKS_JOBS or all cores)")
      ->check(CLI::PositiveNumber);

  VerifyArgs verify;
  auto *verify_cmd = app.add_subcommand("verify", "Run the small-instance theory suites");
  verify_cmd->add_option("--max-n", verify.max_n)->check(CLI::Range(1, 12));
  verify_cmd->add_option("--seed", verify.seed);
  verify_cmd->add_option("--suite", verify.suite)
      ->check(CLI::IsMember({"all", "motzkin", "rounding", "tightness", "landscape"}));

  ScoreArgs score;
  auto *score_cmd = app.add_subcommand("score", "Score an external vertex selection");
  score_cmd->add_option("--graph", score.graph)->required();
  score_cmd->add_option("--selection", score.selection, "One vertex label per line")->required();
  score_cmd->add_option("--lambda", score.lambda)->check(CLI::NonNegativeNumber);
  score_cmd->add_option("--name", score.name, "Method name for the report");
  score_cmd->add_option("--dataset", score.dataset);
  score_cmd->add_option("--output", score.output)->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*solve_cmd)
      return run_solve(solve);
    if (*sweep_cmd)
      return run_sweep(sweep);
    if (*verify_cmd)
      return run_verify(verify);
    return run_score(score);
  } catch (const Exit &e) {
    std::cerr << "error: " << e.message << '\n';
    return e.code;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitSolver;
  }
}
