#include "dks/linalg.hpp"

#include <cmath>
#include <functional>
#include <random>

namespace dks {

namespace {

using Operator = std::function<void(const Vector &, Vector &)>;

struct PowerResult {
  double value = 0.0;
  Vector vector;
  int iterations = 0;
  bool converged = false;
};

// Power iteration with the norm-ratio estimate ||M v|| for unit v. The
// estimate increases monotonically towards the largest |eigenvalue| of a
// symmetric M; if the start is annihilated the seeded random fallback is used.
PowerResult power_iterate(const Operator &apply, Vector start, const PowerOptions &opts,
                          const std::function<void(Vector &)> &project = {}) {
  const Eigen::Index n = start.size();
  PowerResult res;
  res.vector = Vector::Zero(n);
  if (n == 0) {
    res.converged = true;
    return res;
  }

  auto random_start = [&] {
    std::mt19937_64 rng(opts.seed);
    std::normal_distribution<double> normal;
    Vector v(n);
    for (Eigen::Index i = 0; i < n; ++i)
      v[i] = normal(rng);
    if (project)
      project(v);
    return v;
  };

  constexpr double tiny = 1e-300;
  bool used_fallback = false;
  if (project)
    project(start);
  if (start.norm() <= 1e-12 * std::sqrt(static_cast<double>(n))) {
    start = random_start();
    used_fallback = true;
  }
  Vector v = start.normalized();
  Vector w(n);
  double prev = -1.0;
  for (int it = 1; it <= opts.max_iters; ++it) {
    apply(v, w);
    if (project)
      project(w);
    const double est = w.norm();
    res.iterations = it;
    if (est <= tiny) {
      // Either the operator is zero or the start lies in its kernel.
      if (!used_fallback) {
        used_fallback = true;
        Vector r = random_start();
        if (r.norm() > 0.0) {
          v = r.normalized();
          prev = -1.0;
          continue;
        }
      }
      res.value = 0.0;
      res.vector = v;
      res.converged = true;
      return res;
    }
    res.value = est;
    if (prev >= 0.0 && std::abs(est - prev) < opts.tol * est) {
      res.vector = v;
      res.converged = true;
      return res;
    }
    prev = est;
    v = w / est;
  }
  res.vector = v;
  return res;
}

} // namespace

SpectralEstimate spectral_norm(const Graph &g, double lambda, const PowerOptions &opts) {
  if (!(opts.tol > 0.0))
    throw std::invalid_argument("power iteration tolerance must be positive");
  const Operator apply = [&](const Vector &x, Vector &y) { loaded_matvec_into(g, lambda, x, y); };
  auto pr = power_iterate(apply, Vector::Ones(g.n()), opts);

  SpectralEstimate out;
  out.value = pr.value;
  out.iterations = pr.iterations;
  out.converged = pr.converged;
  if (pr.value > 0.0) {
    // Removes the -r component that survives on bipartite spectra.
    Vector mv;
    loaded_matvec_into(g, lambda, pr.vector, mv);
    Vector perron = pr.vector + mv / pr.value;
    const double nrm = perron.norm();
    out.vector = nrm > 1e-12 ? Vector(perron / nrm) : pr.vector;
  } else {
    out.vector = pr.vector;
  }
  if (out.vector.size() > 0) {
    Eigen::Index arg;
    out.vector.cwiseAbs().maxCoeff(&arg);
    if (out.vector[arg] < 0.0)
      out.vector = -out.vector;
  }
  return out;
}

TopSingularValues top_two_singular_values(const Graph &g, const PowerOptions &opts) {
  TopSingularValues out;
  const auto lead = spectral_norm(g, 0.0, opts);
  out.sigma1 = lead.value;
  out.u1 = lead.vector;
  out.theta1 = out.u1.size() > 0 ? out.u1.dot(loaded_matvec(g, 0.0, out.u1)) : 0.0;

  const Vector &u1 = out.u1;
  const double theta1 = out.theta1;
  const Operator deflated = [&](const Vector &x, Vector &y) {
    loaded_matvec_into(g, 0.0, x, y);
    y -= theta1 * u1.dot(x) * u1;
  };
  // A seeded random start: the all-ones vector is often (anti)symmetric to the
  // second eigenvector and would silently miss it.
  std::mt19937_64 rng(opts.seed);
  std::normal_distribution<double> normal;
  Vector start(g.n());
  for (Eigen::Index i = 0; i < start.size(); ++i)
    start[i] = normal(rng);
  auto project = [&](Vector &v) { v -= u1.dot(v) * u1; };
  auto second = power_iterate(deflated, std::move(start), opts,
                              u1.size() > 0 ? std::function<void(Vector &)>(project)
                                            : std::function<void(Vector &)>());
  out.sigma2 = second.value;
  out.converged = lead.converged && second.converged;
  return out;
}

} // namespace dks
