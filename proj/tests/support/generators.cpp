#include "generators.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "clawcycles/canonical.hpp"
#include "clawcycles/fixtures.hpp"
#include "clawcycles/recognizers.hpp"

namespace gen {

using clawcycles::Edge;

Graph random_graph(std::size_t n, double p, Rng& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> es;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (coin(rng)) es.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
  return Graph::from_edges(n, es);
}

std::vector<Vertex> random_permutation(std::size_t n, Rng& rng) {
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

Graph shuffled(const Graph& g, Rng& rng) { return g.relabeled(random_permutation(g.order(), rng)); }

Graph claw_repaired(std::size_t n, double p, Rng& rng) {
  Graph g = random_graph(n, p, rng);
  while (auto claw = clawcycles::find_claw(g)) {
    auto es = g.edges();
    std::uniform_int_distribution<int> pick(0, 2);
    const int a = pick(rng);
    const int b = (a + 1 + pick(rng) % 2) % 3;
    es.emplace_back(claw->leaves[a], claw->leaves[b]);
    g = Graph::from_edges(n, es);
  }
  return g;
}

Graph co_triangle_free(std::size_t n, double p, Rng& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  std::shuffle(pairs.begin(), pairs.end(), rng);
  for (auto [i, j] : pairs) {
    if (!coin(rng)) continue;
    bool triangle = false;
    for (std::size_t k = 0; k < n && !triangle; ++k) triangle = adj[i][k] && adj[j][k];
    if (!triangle) adj[i][j] = adj[j][i] = 1;
  }
  std::vector<Edge> es;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (!adj[i][j]) es.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
  return Graph::from_edges(n, es);
}

Graph random_line_graph(std::size_t vertices, std::size_t edges, Rng& rng) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < vertices; ++i)
    for (std::size_t j = i + 1; j < vertices; ++j) pairs.emplace_back(i, j);
  std::shuffle(pairs.begin(), pairs.end(), rng);
  pairs.resize(std::min(edges, pairs.size()));
  std::vector<Edge> es;
  for (auto [i, j] : pairs) es.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
  return clawcycles::line_graph(Graph::from_edges(vertices, es));
}

Graph random_cubic(std::size_t n, Rng& rng) {
  for (;;) {
    std::vector<Vertex> points;
    for (std::size_t v = 0; v < n; ++v)
      for (int c = 0; c < 3; ++c) points.push_back(static_cast<Vertex>(v));
    std::shuffle(points.begin(), points.end(), rng);
    std::set<Edge> es;
    bool simple = true;
    for (std::size_t i = 0; i < points.size() && simple; i += 2) {
      simple = points[i] != points[i + 1] && es.emplace(points[i], points[i + 1]).second;
    }
    if (simple) return Graph::from_edges(n, std::vector<Edge>(es.begin(), es.end()));
  }
}

namespace {

// Claws through the new vertex x: x as center, or x as a leaf.
bool extension_has_claw(const Graph& g, Vertex x) {
  auto nb = g.neighbors(x);
  for (std::size_t i = 0; i < nb.size(); ++i)
    for (std::size_t j = i + 1; j < nb.size(); ++j) {
      if (g.has_edge(nb[i], nb[j])) continue;
      for (std::size_t k = j + 1; k < nb.size(); ++k)
        if (!g.has_edge(nb[i], nb[k]) && !g.has_edge(nb[j], nb[k])) return true;
    }
  for (Vertex c : nb) {
    auto cn = g.neighbors(c);
    for (std::size_t i = 0; i < cn.size(); ++i) {
      if (cn[i] == x || g.has_edge(cn[i], x)) continue;
      for (std::size_t j = i + 1; j < cn.size(); ++j) {
        if (cn[j] == x || g.has_edge(cn[j], x) || g.has_edge(cn[i], cn[j])) continue;
        return true;
      }
    }
  }
  return false;
}

}  // namespace

std::vector<std::vector<Graph>> claw_free_classes(std::size_t n) {
  std::vector<std::vector<Graph>> levels(n + 1);
  levels[0].push_back(Graph(0));
  for (std::size_t m = 1; m <= n; ++m) {
    std::set<std::string> seen;
    const auto x = static_cast<Vertex>(m - 1);
    for (const Graph& base : levels[m - 1]) {
      const auto edges = base.edges();
      for (std::size_t mask = 0; mask < (std::size_t{1} << (m - 1)); ++mask) {
        std::vector<Edge> es = edges;
        for (std::size_t b = 0; b + 1 < m; ++b)
          if (mask >> b & 1) es.emplace_back(static_cast<Vertex>(b), x);
        Graph g = Graph::from_edges(m, es);
        if (extension_has_claw(g, x)) continue;
        auto cert = clawcycles::canonical_cert(g);
        if (seen.insert(cert.graph6).second) levels[m].push_back(std::move(g));
      }
    }
  }
  return levels;
}

std::pair<Graph, Vertex> bridged_line_petersen() {
  const Graph p = clawcycles::fixtures::petersen();
  // Remove edge 0-1, add vertex 10 adjacent to 0 and 1.
  std::vector<Edge> half;
  for (const Edge& e : p.edges())
    if (!(e.u == 0 && e.v == 1)) half.push_back(e);
  half.emplace_back(0, 10);
  half.emplace_back(1, 10);
  std::vector<Edge> both = half;
  for (const Edge& e : half) both.emplace_back(e.u + 11, e.v + 11);
  both.emplace_back(10, 21);
  const Graph h = Graph::from_edges(22, both);
  const auto es = h.edges();
  const auto bridge = std::find(es.begin(), es.end(), Edge(10, 21)) - es.begin();
  return {clawcycles::line_graph(h), static_cast<Vertex>(bridge)};
}

}  // namespace gen
