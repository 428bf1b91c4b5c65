#include "dks/families.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>
#include <unordered_set>

namespace dks::families {

namespace {

using EdgeList = std::vector<std::pair<Vertex, Vertex>>;

Graph build(Vertex n, const EdgeList &edges) { return Graph::from_edges(n, edges); }

} // namespace

Graph complete(Vertex n) {
  EdgeList e;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j)
      e.emplace_back(i, j);
  return build(n, e);
}

Graph edgeless(Vertex n) { return build(n, {}); }

Graph path(Vertex n) {
  EdgeList e;
  for (Vertex i = 0; i + 1 < n; ++i)
    e.emplace_back(i, i + 1);
  return build(n, e);
}

Graph star(Vertex leaves) {
  EdgeList e;
  for (Vertex i = 1; i <= leaves; ++i)
    e.emplace_back(0, i);
  return build(leaves + 1, e);
}

Graph triangle() { return complete(3); }

Graph disjoint_triangles(Vertex count) {
  EdgeList e;
  for (Vertex t = 0; t < count; ++t) {
    const Vertex b = 3 * t;
    e.insert(e.end(), {{b, b + 1}, {b + 1, b + 2}, {b, b + 2}});
  }
  return build(3 * count, e);
}

Graph random_graph(Vertex n, double p, std::mt19937_64 &rng) {
  std::bernoulli_distribution coin(p);
  EdgeList e;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j)
      if (coin(rng))
        e.emplace_back(i, j);
  return build(n, e);
}

Graph random_graph_nm(Vertex n, std::int64_t m, std::mt19937_64 &rng) {
  std::uniform_int_distribution<Vertex> pick(0, n - 1);
  std::unordered_set<std::uint64_t> seen;
  EdgeList e;
  e.reserve(m);
  while (static_cast<std::int64_t>(e.size()) < m) {
    Vertex u = pick(rng), v = pick(rng);
    if (u == v)
      continue;
    if (u > v)
      std::swap(u, v);
    if (seen.insert((static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(v)).second)
      e.emplace_back(u, v);
  }
  return build(n, e);
}

std::vector<Graph> connected_graphs(Vertex max_n) {
  if (max_n > 6)
    throw std::invalid_argument("connected_graphs enumerates at most 6 vertices");
  std::vector<Graph> out;
  for (Vertex n = 1; n <= max_n; ++n) {
    std::vector<std::pair<Vertex, Vertex>> slots;
    for (Vertex i = 0; i < n; ++i)
      for (Vertex j = i + 1; j < n; ++j)
        slots.emplace_back(i, j);
    std::array<std::array<int, 6>, 6> slot_of{};
    for (std::size_t s = 0; s < slots.size(); ++s) {
      slot_of[slots[s].first][slots[s].second] = static_cast<int>(s);
      slot_of[slots[s].second][slots[s].first] = static_cast<int>(s);
    }
    std::vector<std::array<Vertex, 6>> perms;
    std::array<Vertex, 6> p{};
    std::iota(p.begin(), p.begin() + n, Vertex{0});
    do {
      perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.begin() + n));

    std::set<std::uint32_t> canon_seen;
    const std::uint32_t total = 1u << slots.size();
    for (std::uint32_t mask = 0; mask < total; ++mask) {
      // Connectivity by flood fill over the bitmask.
      std::uint32_t reached = 1, frontier = 1;
      while (frontier) {
        std::uint32_t next = 0;
        for (Vertex v = 0; v < n; ++v) {
          if (!(frontier >> v & 1u))
            continue;
          for (Vertex u = 0; u < n; ++u)
            if (u != v && (mask >> slot_of[v][u] & 1u) && !(reached >> u & 1u))
              next |= 1u << u;
        }
        reached |= next;
        frontier = next;
      }
      if (reached != (1u << n) - 1)
        continue;
      std::uint32_t canon = UINT32_MAX;
      for (const auto &perm : perms) {
        std::uint32_t image = 0;
        for (std::size_t s = 0; s < slots.size(); ++s)
          if (mask >> s & 1u)
            image |= 1u << slot_of[perm[slots[s].first]][perm[slots[s].second]];
        canon = std::min(canon, image);
      }
      if (!canon_seen.insert(canon).second)
        continue;
      EdgeList e;
      for (std::size_t s = 0; s < slots.size(); ++s)
        if (canon >> s & 1u)
          e.push_back(slots[s]);
      out.push_back(build(n, e));
    }
  }
  return out;
}

std::vector<Graph> test_family(const FamilySpec &spec) {
  auto out = connected_graphs(spec.exhaustive_max_n);
  std::mt19937_64 rng(spec.seed ^ 0xD5A61266F0C9392Cull);
  std::uniform_int_distribution<Vertex> size(spec.random_min_n, spec.random_max_n);
  std::uniform_real_distribution<double> density(0.25, 0.85);
  for (int i = 0; i < spec.random_count; ++i) {
    const Vertex n = size(rng);
    const double p = density(rng);
    out.push_back(random_graph(n, p, rng));
  }
  return out;
}

Graph planted_clique_graph(Vertex n, std::int64_t m, Vertex clique, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::set<std::pair<Vertex, Vertex>> edges;
  auto add = [&](Vertex u, Vertex v) {
    if (u != v)
      edges.emplace(std::min(u, v), std::max(u, v));
  };
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), Vertex{0});
  std::shuffle(order.begin(), order.end(), rng);
  for (Vertex i = 0; i < clique; ++i)
    for (Vertex j = i + 1; j < clique; ++j)
      add(order[i], order[j]);

  // Communities of varying size and density take most of the remaining budget.
  const auto community_budget = static_cast<std::int64_t>(0.85 * static_cast<double>(m));
  std::uniform_int_distribution<Vertex> community_size(40, 250);
  std::uniform_real_distribution<double> density(0.05, 0.3);
  std::uniform_int_distribution<Vertex> anyone(0, n - 1);
  while (static_cast<std::int64_t>(edges.size()) < community_budget) {
    const Vertex size = community_size(rng);
    std::vector<Vertex> members(size);
    for (auto &v : members)
      v = anyone(rng);
    std::bernoulli_distribution coin(density(rng));
    for (Vertex i = 0; i < size && static_cast<std::int64_t>(edges.size()) < community_budget; ++i)
      for (Vertex j = i + 1; j < size; ++j)
        if (coin(rng))
          add(members[i], members[j]);
  }
  while (static_cast<std::int64_t>(edges.size()) < m)
    add(anyone(rng), anyone(rng));

  EdgeList list(edges.begin(), edges.end());
  return build(n, list);
}

} // namespace dks::families
