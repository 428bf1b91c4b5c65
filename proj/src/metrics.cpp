#include "dks/metrics.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>

#include "json.hpp"

#include "dks/baselines.hpp"

namespace dks {

namespace {

using clock = std::chrono::steady_clock;

double seconds_since(clock::time_point t0) {
  return std::chrono::duration<double>(clock::now() - t0).count();
}

ExperimentRecord run_cell(const Graph &g, Vertex k, const std::string &solver,
                          const SweepOptions &opts) {
  ExperimentRecord rec;
  rec.dataset = opts.dataset;
  rec.n = g.n();
  rec.m = g.m();
  rec.k = k;
  rec.lambda = opts.lambda;
  rec.solver = solver;
  try {
    const ProblemInstance inst(g, k, opts.lambda);
    VertexSelection sel;
    if (solver == "fw" || solver == "param") {
      const auto rep = solver == "fw"
                           ? fw_solve(inst, opts.fw)
                           : param_solve(inst, opts.param, initial_theta(g.n(), opts.seed));
      sel = rep.selection;
      rec.iterations = rep.iterations;
      rec.wall_time_s = rep.wall_time;
      rec.integral_before_projection = rep.integral;
    } else {
      const auto t0 = clock::now();
      sel = solver == "greedy" ? greedy_feige(g, k) : rank1_lrbo(g, k);
      rec.wall_time_s = seconds_since(t0);
      rec.integral_before_projection = true;
    }
    sel = make_selection(g, sel.vertices, opts.lambda);
    rec.normalized_density = sel.normalized_density;
    rec.objective = sel.objective_at_lambda;
  } catch (const std::exception &e) {
    rec.status = std::string("failed: ") + e.what();
  }
  return rec;
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

double round_to_12(double v) { return std::strtod(format_double(v).c_str(), nullptr); }

std::string csv_field(const std::string &s) {
  if (s.find_first_of(",\"\n") == std::string::npos)
    return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"')
      out += '"';
    out += c;
  }
  return out + "\"";
}

std::vector<std::string> split_csv_line(const std::string &line) {
  std::vector<std::string> fields(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        fields.back() += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        fields.back() += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.emplace_back();
    } else {
      fields.back() += c;
    }
  }
  return fields;
}

nlohmann::ordered_json to_json(const ExperimentRecord &r) {
  nlohmann::ordered_json j;
  j["dataset"] = r.dataset;
  j["n"] = r.n;
  j["m"] = r.m;
  j["k"] = r.k;
  j["lambda"] = round_to_12(r.lambda);
  j["solver"] = r.solver;
  j["normalized_density"] = round_to_12(r.normalized_density);
  j["objective"] = round_to_12(r.objective);
  j["iterations"] = r.iterations;
  j["wall_time_s"] = round_to_12(r.wall_time_s);
  j["integral_before_projection"] = r.integral_before_projection;
  j["upper_bound"] = r.upper_bound ? nlohmann::ordered_json(round_to_12(*r.upper_bound))
                                   : nlohmann::ordered_json(nullptr);
  j["status"] = r.status;
  return j;
}

ExperimentRecord from_json(const nlohmann::json &j) {
  ExperimentRecord r;
  r.dataset = j.at("dataset").get<std::string>();
  r.n = j.at("n").get<Vertex>();
  r.m = j.at("m").get<std::int64_t>();
  r.k = j.at("k").get<Vertex>();
  r.lambda = j.at("lambda").get<double>();
  r.solver = j.at("solver").get<std::string>();
  r.normalized_density = j.at("normalized_density").get<double>();
  r.objective = j.at("objective").get<double>();
  r.iterations = j.at("iterations").get<int>();
  r.wall_time_s = j.at("wall_time_s").get<double>();
  r.integral_before_projection = j.at("integral_before_projection").get<bool>();
  if (!j.at("upper_bound").is_null())
    r.upper_bound = j.at("upper_bound").get<double>();
  r.status = j.at("status").get<std::string>();
  return r;
}

template <typename T> T parse_number(const std::string &field, std::size_t line) {
  T value{};
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size())
    throw ParseError("report line " + std::to_string(line) + ": bad number '" + field + "'", line);
  return value;
}

} // namespace

std::vector<ExperimentRecord> run_sweep(const Graph &g, const std::vector<Vertex> &k_values,
                                        const std::vector<std::string> &solvers,
                                        const SweepOptions &opts) {
  if (!std::is_sorted(k_values.begin(), k_values.end()))
    throw std::invalid_argument("k values must be sorted ascending");
  for (Vertex k : k_values)
    if (k < 2 || k > g.n())
      throw std::invalid_argument("k=" + std::to_string(k) + " outside [2, n=" +
                                  std::to_string(g.n()) + "]");
  for (const auto &s : solvers)
    if (std::find(known_solvers().begin(), known_solvers().end(), s) == known_solvers().end())
      throw std::invalid_argument("unknown solver '" + s + "'");

  const auto spectrum = top_two_singular_values(g, certificate_power_options());

  struct Cell {
    Vertex k;
    const std::string *solver;
  };
  std::vector<Cell> cells;
  for (const auto &s : solvers)
    for (Vertex k : k_values)
      cells.push_back({k, &s});

  std::vector<ExperimentRecord> records(cells.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < cells.size();) {
      records[i] = run_cell(g, cells[i].k, *cells[i].solver, opts);
      records[i].upper_bound = density_upper_bound(g, cells[i].k, spectrum);
    }
  };
  const unsigned jobs = std::max(1u, std::min<unsigned>(opts.jobs, cells.size()));
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < jobs; ++t)
      pool.emplace_back(worker);
    worker();
  }

  std::sort(records.begin(), records.end(), [](const auto &a, const auto &b) {
    return std::tie(a.dataset, a.solver, a.k) < std::tie(b.dataset, b.solver, b.k);
  });
  return records;
}

ExperimentRecord score_selection(const Graph &g, const std::vector<Vertex> &vertices,
                                 const std::string &solver, const std::string &dataset,
                                 double lambda) {
  const auto k = static_cast<Vertex>(vertices.size());
  if (k < 2 || k > g.n())
    throw std::invalid_argument("selection must hold between 2 and n vertices");
  const auto sel = make_selection(g, vertices, lambda);
  ExperimentRecord rec;
  rec.dataset = dataset;
  rec.n = g.n();
  rec.m = g.m();
  rec.k = k;
  rec.lambda = lambda;
  rec.solver = solver;
  rec.normalized_density = sel.normalized_density;
  rec.objective = sel.objective_at_lambda;
  rec.integral_before_projection = true;
  rec.upper_bound = density_upper_bound(g, k);
  return rec;
}

std::vector<Vertex> load_selection_file(const Graph &g, const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in)
    throw std::ios_base::failure("cannot open " + path.string());
  std::vector<Vertex> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#')
      continue;
    const auto last = line.find_last_not_of(" \t\r");
    const Label label = parse_number<Label>(line.substr(first, last - first + 1), lineno);
    const Vertex v = g.index_of(label);
    if (v < 0)
      throw std::domain_error(path.string() + ":" + std::to_string(lineno) + ": vertex " +
                              std::to_string(label) + " is not in the graph");
    out.push_back(v);
  }
  return out;
}

const std::vector<std::string> &report_columns() {
  static const std::vector<std::string> cols{
      "dataset",     "n",          "m",
      "k",           "lambda",     "solver",
      "normalized_density", "objective", "iterations",
      "wall_time_s", "integral_before_projection", "upper_bound",
      "status"};
  return cols;
}

std::string format_report(const std::vector<ExperimentRecord> &records, ReportFormat format) {
  if (records.empty())
    throw std::invalid_argument("cannot write an empty report");
  if (format == ReportFormat::Json) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto &r : records)
      arr.push_back(to_json(r));
    return arr.dump(2) + "\n";
  }
  std::ostringstream out;
  const auto &cols = report_columns();
  for (std::size_t i = 0; i < cols.size(); ++i)
    out << (i ? "," : "") << cols[i];
  out << '\n';
  for (const auto &r : records) {
    out << csv_field(r.dataset) << ',' << r.n << ',' << r.m << ',' << r.k << ','
        << format_double(r.lambda) << ',' << csv_field(r.solver) << ','
        << format_double(r.normalized_density) << ',' << format_double(r.objective) << ','
        << r.iterations << ',' << format_double(r.wall_time_s) << ','
        << (r.integral_before_projection ? "true" : "false") << ','
        << (r.upper_bound ? format_double(*r.upper_bound) : "") << ',' << csv_field(r.status)
        << '\n';
  }
  return out.str();
}

void write_report(const std::vector<ExperimentRecord> &records, const std::filesystem::path &path,
                  ReportFormat format) {
  const auto text = format_report(records, format);
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw std::ios_base::failure("cannot write " + path.string());
  out << text;
  if (!out)
    throw std::ios_base::failure("write failed for " + path.string());
}

std::vector<ExperimentRecord> read_report(const std::filesystem::path &path, ReportFormat format) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw std::ios_base::failure("cannot open " + path.string());
  std::vector<ExperimentRecord> out;
  if (format == ReportFormat::Json) {
    for (const auto &j : nlohmann::json::parse(in))
      out.push_back(from_json(j));
    return out;
  }
  std::string line;
  std::size_t lineno = 1;
  if (!std::getline(in, line) || split_csv_line(line) != report_columns())
    throw ParseError("report header does not match the expected columns", 1);
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty())
      continue;
    const auto f = split_csv_line(line);
    if (f.size() != report_columns().size())
      throw ParseError("report line " + std::to_string(lineno) + ": wrong field count", lineno);
    ExperimentRecord r;
    r.dataset = f[0];
    r.n = parse_number<Vertex>(f[1], lineno);
    r.m = parse_number<std::int64_t>(f[2], lineno);
    r.k = parse_number<Vertex>(f[3], lineno);
    r.lambda = parse_number<double>(f[4], lineno);
    r.solver = f[5];
    r.normalized_density = parse_number<double>(f[6], lineno);
    r.objective = parse_number<double>(f[7], lineno);
    r.iterations = parse_number<int>(f[8], lineno);
    r.wall_time_s = parse_number<double>(f[9], lineno);
    r.integral_before_projection = f[10] == "true";
    if (!f[11].empty())
      r.upper_bound = parse_number<double>(f[11], lineno);
    r.status = f[12];
    out.push_back(std::move(r));
  }
  return out;
}

unsigned default_jobs() {
  if (const char *env = std::getenv("DKS_JOBS")) {
    unsigned v = 0;
    auto [ptr, ec] = std::from_chars(env, env + std::char_traits<char>::length(env), v);
    if (ec == std::errc() && v > 0)
      return v;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

} // namespace dks
