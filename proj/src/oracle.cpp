#include "dks/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <random>

#include "dks/linalg.hpp"

namespace dks::oracle {

namespace {

double binomial(Vertex n, Vertex k) {
  double c = 1.0;
  for (Vertex i = 1; i <= k; ++i)
    c = c * (n - k + i) / i;
  return c;
}

using Mask = std::uint64_t;

std::vector<Mask> adjacency_masks(const Graph &g) {
  std::vector<Mask> adj(g.n(), 0);
  for (Vertex v = 0; v < g.n(); ++v)
    for (Vertex u : g.neighbors(v))
      adj[v] |= Mask{1} << u;
  return adj;
}

void guard(const Graph &g, Vertex limit, const char *what) {
  if (g.n() > limit)
    throw SizeError(std::string(what) + ": graph has " + std::to_string(g.n()) +
                    " vertices, limit is " + std::to_string(limit));
}

} // namespace

ExactDks exact_dks(const Graph &g, Vertex k, double lambda) {
  const Vertex n = g.n();
  if (k < 1 || k > n)
    throw std::invalid_argument("exact_dks: k outside [1, n]");
  if (binomial(n, k) > 1e7)
    throw SizeError("exact_dks: C(" + std::to_string(n) + "," + std::to_string(k) +
                    ") exceeds the 1e7 enumeration guard");

  // Lexicographic k-combinations; strict improvement keeps the smallest argmax.
  std::vector<Vertex> comb(k);
  std::iota(comb.begin(), comb.end(), Vertex{0});
  std::vector<Vertex> best = comb;
  std::int64_t best_edges = -1;
  const bool use_masks = n <= 64;
  const auto masks = use_masks ? adjacency_masks(g) : std::vector<Mask>{};
  for (;;) {
    std::int64_t edges = 0;
    if (use_masks) {
      Mask set = 0;
      for (Vertex v : comb)
        set |= Mask{1} << v;
      for (Vertex v : comb)
        edges += std::popcount(masks[v] & set);
      edges /= 2;
    } else {
      edges = induced_edge_count(g, comb);
    }
    if (edges > best_edges) {
      best_edges = edges;
      best = comb;
    }
    Vertex i = k - 1;
    while (i >= 0 && comb[i] == n - k + i)
      --i;
    if (i < 0)
      break;
    ++comb[i];
    for (Vertex j = i + 1; j < k; ++j)
      comb[j] = comb[j - 1] + 1;
  }
  ExactDks out;
  out.best = make_selection(g, best, lambda);
  out.value = out.best.objective_at_lambda;
  return out;
}

namespace {

void clique_search(const std::vector<Mask> &adj, Mask current, int size, Mask candidates,
                   Mask &best, int &best_size) {
  if (candidates == 0) {
    if (size > best_size) {
      best_size = size;
      best = current;
    }
    return;
  }
  while (candidates) {
    if (size + std::popcount(candidates) <= best_size)
      return;
    const int v = std::countr_zero(candidates);
    candidates &= candidates - 1;
    clique_search(adj, current | (Mask{1} << v), size + 1, candidates & adj[v], best, best_size);
  }
}

void bron_kerbosch(const std::vector<Mask> &adj, Mask r, Mask p, Mask x,
                   std::vector<std::vector<Vertex>> &out) {
  if (p == 0 && x == 0) {
    std::vector<Vertex> clique;
    for (Mask m = r; m; m &= m - 1)
      clique.push_back(static_cast<Vertex>(std::countr_zero(m)));
    out.push_back(std::move(clique));
    return;
  }
  const Mask px = p | x;
  int pivot = std::countr_zero(px);
  int best = -1;
  for (Mask m = px; m; m &= m - 1) {
    const int u = std::countr_zero(m);
    const int c = std::popcount(p & adj[u]);
    if (c > best) {
      best = c;
      pivot = u;
    }
  }
  for (Mask m = p & ~adj[pivot]; m; m &= m - 1) {
    const int v = std::countr_zero(m);
    const Mask bit = Mask{1} << v;
    bron_kerbosch(adj, r | bit, p & adj[v], x & adj[v], out);
    p &= ~bit;
    x |= bit;
  }
}

} // namespace

std::vector<Vertex> maximum_clique(const Graph &g) {
  guard(g, 32, "maximum_clique");
  const auto adj = adjacency_masks(g);
  Mask all = g.n() == 0 ? 0 : (g.n() == 64 ? ~Mask{0} : (Mask{1} << g.n()) - 1);
  Mask best = 0;
  int best_size = 0;
  clique_search(adj, 0, 0, all, best, best_size);
  std::vector<Vertex> out;
  for (Mask m = best; m; m &= m - 1)
    out.push_back(static_cast<Vertex>(std::countr_zero(m)));
  return out;
}

Vertex max_clique_size(const Graph &g) { return static_cast<Vertex>(maximum_clique(g).size()); }

std::vector<std::vector<Vertex>> maximal_cliques(const Graph &g) {
  guard(g, 32, "maximal_cliques");
  const auto adj = adjacency_masks(g);
  std::vector<std::vector<Vertex>> out;
  if (g.n() == 0)
    return out;
  const Mask all = (Mask{1} << g.n()) - 1;
  bron_kerbosch(adj, 0, all, 0, out);
  std::sort(out.begin(), out.end());
  return out;
}

Vector project_to_simplex(const Vector &v, double scale) {
  const Eigen::Index n = v.size();
  std::vector<double> u(v.data(), v.data() + n);
  std::sort(u.begin(), u.end(), std::greater<>());
  double cumulative = 0.0, tau = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    cumulative += u[i];
    const double t = (cumulative - scale) / static_cast<double>(i + 1);
    if (u[i] - t > 0.0)
      tau = t;
  }
  return (v.array() - tau).max(0.0).matrix();
}

Vector project_to_capped_simplex(const Vector &v, double k) {
  if (k < 0.0 || k > static_cast<double>(v.size()))
    throw std::invalid_argument("capped simplex budget outside [0, n]");
  auto total = [&](double tau) { return (v.array() - tau).max(0.0).min(1.0).sum(); };
  double lo = v.minCoeff() - 1.0, hi = v.maxCoeff();
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    (total(mid) > k ? lo : hi) = mid;
  }
  Vector x = (v.array() - 0.5 * (lo + hi)).max(0.0).min(1.0).matrix();
  // Spread the residual over interior coordinates so the budget is exact.
  const double residual = k - x.sum();
  std::vector<Eigen::Index> interior;
  for (Eigen::Index i = 0; i < x.size(); ++i)
    if (x[i] > 0.0 && x[i] < 1.0)
      interior.push_back(i);
  if (!interior.empty()) {
    const double share = residual / static_cast<double>(interior.size());
    for (auto i : interior)
      x[i] = std::clamp(x[i] + share, 0.0, 1.0);
  }
  return x;
}

SimplexMax simplex_qp_max(const Graph &g, double lambda, double scale, int restarts,
                          std::uint64_t seed) {
  guard(g, 32, "simplex_qp_max");
  const Vertex n = g.n();
  if (n == 0)
    return {};
  const Matrix q = adjacency_matrix(g) + lambda * Matrix::Identity(n, n);
  auto value = [&](const Vector &x) { return x.dot(q * x); };

  std::vector<Vector> starts;
  for (const auto &clique : maximal_cliques(g)) {
    Vector x = Vector::Zero(n);
    for (Vertex v : clique)
      x[v] = scale / static_cast<double>(clique.size());
    starts.push_back(std::move(x));
  }
  for (int r = 0; r < restarts; ++r) {
    std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ull + static_cast<std::uint64_t>(r));
    std::exponential_distribution<double> expo(1.0);
    Vector w(n);
    for (Vertex i = 0; i < n; ++i)
      w[i] = expo(rng);
    starts.push_back(w * (scale / w.sum()));
  }

  const double lipschitz = 2.0 * (q.cwiseAbs().rowwise().sum().maxCoeff() + 1e-12);
  SimplexMax best;
  best.value = -std::numeric_limits<double>::infinity();
  for (auto &x : starts) {
    double fx = value(x);
    double step = 1.0 / lipschitz;
    for (int it = 0; it < 5000; ++it) {
      const Vector grad = 2.0 * q * x;
      // Backtracking on the projected arc; accept the first sufficient ascent.
      bool moved = false;
      for (int bt = 0; bt < 40; ++bt) {
        Vector y = project_to_simplex(x + step * grad, scale);
        const double fy = value(y);
        const double sq = (y - x).squaredNorm();
        if (fy >= fx + sq / (2.0 * step)) {
          moved = sq > 1e-24;
          x = std::move(y);
          fx = fy;
          step *= 2.0;
          break;
        }
        step *= 0.5;
      }
      if (!moved)
        break;
    }
    if (fx > best.value) {
      best.value = fx;
      best.point = x;
    }
  }
  return best;
}

Matrix adjacency_matrix(const Graph &g) {
  Matrix a = Matrix::Zero(g.n(), g.n());
  for (Vertex v = 0; v < g.n(); ++v)
    for (Vertex u : g.neighbors(v))
      a(v, u) = 1.0;
  return a;
}

DenseEig jacobi_eigensolver(Matrix a) {
  const Eigen::Index n = a.rows();
  Matrix v = Matrix::Identity(n, n);
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (Eigen::Index p = 0; p < n; ++p)
      for (Eigen::Index q = p + 1; q < n; ++q)
        off += a(p, q) * a(p, q);
    if (off < 1e-30)
      break;
    for (Eigen::Index p = 0; p < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        if (std::abs(a(p, q)) < 1e-300)
          continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * a(p, q));
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (Eigen::Index r = 0; r < n; ++r) {
          const double arp = a(r, p), arq = a(r, q);
          a(r, p) = c * arp - s * arq;
          a(r, q) = s * arp + c * arq;
        }
        for (Eigen::Index r = 0; r < n; ++r) {
          const double apr = a(p, r), aqr = a(q, r);
          a(p, r) = c * apr - s * aqr;
          a(q, r) = s * apr + c * aqr;
        }
        for (Eigen::Index r = 0; r < n; ++r) {
          const double vrp = v(r, p), vrq = v(r, q);
          v(r, p) = c * vrp - s * vrq;
          v(r, q) = s * vrp + c * vrq;
        }
      }
    }
  }
  std::vector<Eigen::Index> order(n);
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](auto i, auto j) { return a(i, i) > a(j, j); });
  DenseEig out;
  out.values.resize(n);
  out.vectors.resize(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    out.values[i] = a(order[i], order[i]);
    out.vectors.col(i) = v.col(order[i]);
  }
  return out;
}

DenseEig dense_eig(const Graph &g) {
  guard(g, 64, "dense_eig");
  return jacobi_eigensolver(adjacency_matrix(g));
}

} // namespace dks::oracle
