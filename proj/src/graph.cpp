#include "dks/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <memory>
#include <numeric>
#include <string>
#include <unordered_map>

#include <zlib.h>

namespace dks {

Graph Graph::from_edges(Vertex n, std::span<const std::pair<Vertex, Vertex>> edges,
                        std::vector<Label> labels) {
  if (n < 0)
    throw std::invalid_argument("negative vertex count");
  if (!labels.empty() && labels.size() != static_cast<std::size_t>(n))
    throw std::invalid_argument("label count does not match vertex count");

  Graph g;
  g.n_ = n;
  g.degrees_.assign(n, 0);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw std::domain_error("edge endpoint out of range");
    if (u == v)
      continue;
    ++g.degrees_[u];
    ++g.degrees_[v];
  }

  // Fill with duplicates first, then sort and unique each row in place.
  std::vector<std::int64_t> offsets(n + 1, 0);
  for (Vertex v = 0; v < n; ++v)
    offsets[v + 1] = offsets[v] + g.degrees_[v];
  std::vector<Vertex> adj(offsets[n]);
  std::vector<std::int64_t> cursor(offsets.begin(), offsets.end() - 1);
  for (auto [u, v] : edges) {
    if (u == v)
      continue;
    adj[cursor[u]++] = v;
    adj[cursor[v]++] = u;
  }

  g.row_offsets_.assign(n + 1, 0);
  g.neighbors_.reserve(adj.size());
  for (Vertex v = 0; v < n; ++v) {
    auto first = adj.begin() + offsets[v];
    auto last = adj.begin() + offsets[v + 1];
    std::sort(first, last);
    last = std::unique(first, last);
    g.neighbors_.insert(g.neighbors_.end(), first, last);
    g.row_offsets_[v + 1] = static_cast<std::int64_t>(g.neighbors_.size());
    g.degrees_[v] = static_cast<Vertex>(g.row_offsets_[v + 1] - g.row_offsets_[v]);
  }
  g.neighbors_.shrink_to_fit();
  g.m_ = static_cast<std::int64_t>(g.neighbors_.size()) / 2;

  if (labels.empty()) {
    g.labels_.resize(n);
    std::iota(g.labels_.begin(), g.labels_.end(), Label{0});
  } else {
    g.labels_ = std::move(labels);
  }
  return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  auto row = neighbors(u);
  return std::binary_search(row.begin(), row.end(), v);
}

Vertex Graph::index_of(Label label) const {
  // Labels are the identity for generated graphs; avoid the scan then.
  if (label >= 0 && label < n_ && labels_[label] == label)
    return static_cast<Vertex>(label);
  auto it = std::find(labels_.begin(), labels_.end(), label);
  return it == labels_.end() ? Vertex{-1} : static_cast<Vertex>(it - labels_.begin());
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(m_);
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v : neighbors(u))
      if (u < v)
        out.emplace_back(u, v);
  return out;
}

ProblemInstance::ProblemInstance(const Graph &g, Vertex k_, double lambda_)
    : graph(g), k(k_), lambda(lambda_) {
  if (k < 1 || k > g.n())
    throw std::invalid_argument("subgraph size k must satisfy 1 <= k <= n (k=" +
                                std::to_string(k) + ", n=" + std::to_string(g.n()) + ")");
  if (!(lambda >= 0.0))
    throw std::invalid_argument("diagonal loading lambda must be >= 0");
}

namespace {

// Line source over plain or gzip-compressed text.
class LineReader {
public:
  explicit LineReader(const std::filesystem::path &path) {
    if (path.extension() == ".gz") {
      gz_ = gzopen(path.string().c_str(), "rb");
      if (!gz_)
        throw std::ios_base::failure("cannot open " + path.string());
    } else {
      in_.open(path);
      if (!in_)
        throw std::ios_base::failure("cannot open " + path.string());
    }
  }
  ~LineReader() {
    if (gz_)
      gzclose(gz_);
  }
  LineReader(const LineReader &) = delete;
  LineReader &operator=(const LineReader &) = delete;

  bool next(std::string &line) {
    if (!gz_)
      return static_cast<bool>(std::getline(in_, line));
    line.clear();
    char buf[4096];
    while (gzgets(gz_, buf, sizeof buf)) {
      line.append(buf);
      if (!line.empty() && line.back() == '\n') {
        line.pop_back();
        return true;
      }
    }
    return !line.empty();
  }

private:
  std::ifstream in_;
  gzFile gz_ = nullptr;
};

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

} // namespace

Graph load_edge_list(const std::filesystem::path &path, bool /*directed_input*/) {
  LineReader reader(path);
  std::unordered_map<Label, Vertex> index;
  std::vector<Label> labels;
  std::vector<std::pair<Vertex, Vertex>> edges;

  auto intern = [&](Label label) {
    auto [it, inserted] = index.try_emplace(label, static_cast<Vertex>(labels.size()));
    if (inserted)
      labels.push_back(label);
    return it->second;
  };

  std::string line;
  std::size_t lineno = 0;
  while (reader.next(line)) {
    ++lineno;
    std::size_t pos = 0;
    auto skip = [&] {
      while (pos < line.size() && is_space(line[pos]))
        ++pos;
    };
    skip();
    if (pos == line.size() || line[pos] == '#')
      continue;

    Label ids[2];
    for (auto &id : ids) {
      skip();
      const char *first = line.data() + pos;
      const char *last = line.data() + line.size();
      auto [ptr, ec] = std::from_chars(first, last, id);
      if (ec != std::errc() || (ptr != last && !is_space(*ptr)))
        throw ParseError(path.string() + ":" + std::to_string(lineno) +
                             ": expected two integer vertex ids",
                         lineno);
      pos = static_cast<std::size_t>(ptr - line.data());
    }
    skip();
    if (pos != line.size())
      throw ParseError(path.string() + ":" + std::to_string(lineno) +
                           ": extra tokens (weighted edge lists are not supported)",
                       lineno);
    Vertex u = intern(ids[0]);
    Vertex v = intern(ids[1]);
    edges.emplace_back(u, v);
  }

  if (labels.empty())
    throw ParseError(path.string() + ": edge list contains no vertices", lineno);
  const auto n = static_cast<Vertex>(labels.size());
  return Graph::from_edges(n, edges, std::move(labels));
}

void save_edge_list(const Graph &g, const std::filesystem::path &path) {
  std::ofstream out(path);
  if (!out)
    throw std::ios_base::failure("cannot write " + path.string());
  out << "# undirected graph: " << g.n() << " vertices, " << g.m() << " edges\n";
  for (Vertex v = 0; v < g.n(); ++v) {
    auto row = g.neighbors(v);
    if (row.empty() || row.front() > v)
      out << g.label(v) << ' ' << g.label(v) << '\n';
    for (Vertex u : row) {
      if (u >= v)
        break;
      out << g.label(v) << ' ' << g.label(u) << '\n';
    }
  }
  if (!out)
    throw std::ios_base::failure("write failed for " + path.string());
}

std::int64_t induced_edge_count(const Graph &g, std::span<const Vertex> subset) {
  std::vector<char> in(g.n(), 0);
  for (Vertex v : subset) {
    if (v < 0 || v >= g.n())
      throw std::domain_error("vertex id " + std::to_string(v) + " out of range");
    if (in[v])
      throw std::invalid_argument("duplicate vertex " + std::to_string(v) + " in subset");
    in[v] = 1;
  }
  std::int64_t twice = 0;
  for (Vertex v : subset)
    for (Vertex u : g.neighbors(v))
      twice += in[u];
  return twice / 2;
}

double normalized_density(const Graph &g, std::span<const Vertex> subset) {
  const auto k = static_cast<double>(subset.size());
  if (subset.size() < 2)
    throw std::domain_error("normalized density needs at least two vertices");
  return 2.0 * static_cast<double>(induced_edge_count(g, subset)) / (k * (k - 1.0));
}

} // namespace dks
