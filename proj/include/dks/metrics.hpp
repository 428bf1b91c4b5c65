#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "dks/fw.hpp"
#include "dks/param.hpp"

namespace dks {

/// One (dataset, solver, k) cell of a sweep.
struct ExperimentRecord {
  std::string dataset;
  Vertex n = 0;
  std::int64_t m = 0;
  Vertex k = 0;
  double lambda = 1.0;
  std::string solver;
  double normalized_density = 0.0;
  double objective = 0.0;
  int iterations = 0;
  double wall_time_s = 0.0;
  bool integral_before_projection = false;
  std::optional<double> upper_bound;
  std::string status = "ok"; ///< "ok" or "failed: <reason>"

  bool failed() const { return status != "ok"; }
};

/// Solver names accepted by run_sweep and the CLI.
inline const std::vector<std::string> &known_solvers() {
  static const std::vector<std::string> names{"fw", "param", "greedy", "rank1"};
  return names;
}

struct SweepOptions {
  std::string dataset = "graph";
  double lambda = 1.0;
  FwConfig fw;
  OptimizerConfig param;
  std::uint64_t seed = 0;
  unsigned jobs = 1;
};

/// Runs every solver at every k and attaches the density upper bound.
/// Records are sorted by (dataset, solver, k). A failing cell is kept as a
/// record with a "failed" status.
std::vector<ExperimentRecord> run_sweep(const Graph &g, const std::vector<Vertex> &k_values,
                                        const std::vector<std::string> &solvers,
                                        const SweepOptions &opts = {});

/// Scores an externally produced vertex set.
ExperimentRecord score_selection(const Graph &g, const std::vector<Vertex> &vertices,
                                 const std::string &solver, const std::string &dataset,
                                 double lambda);

/// Reads one original vertex label per line ('#' comments allowed) and maps
/// labels to dense ids of `g`.
std::vector<Vertex> load_selection_file(const Graph &g, const std::filesystem::path &path);

enum class ReportFormat { Csv, Json };

/// Column order of the CSV header; JSON objects use the same keys.
const std::vector<std::string> &report_columns();

void write_report(const std::vector<ExperimentRecord> &records, const std::filesystem::path &path,
                  ReportFormat format);
std::string format_report(const std::vector<ExperimentRecord> &records, ReportFormat format);
std::vector<ExperimentRecord> read_report(const std::filesystem::path &path, ReportFormat format);

/// Number of worker threads: DKS_JOBS when set, else hardware concurrency.
unsigned default_jobs();

} // namespace dks
