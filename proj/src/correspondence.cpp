#include "clawcycles/correspondence.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <string>

#include "clawcycles/recognizers.hpp"

namespace clawcycles {

TriangleDecomposition triangle_decomposition(const Graph& g) {
  if (!g.is_cubic()) throw Error(ErrorKind::NotCubic, "graph is not cubic");
  if (auto claw = find_claw(g)) {
    throw Error(ErrorKind::ClawFound, "graph has an induced claw",
                {claw->center, claw->leaves[0], claw->leaves[1], claw->leaves[2]});
  }
  if (auto c4 = find_c4(g)) throw Error(ErrorKind::C4Found, "graph contains a 4-cycle", c4->vertices);

  const std::size_t n = g.order();
  TriangleDecomposition d;
  d.triangle_of.assign(n, -1);
  d.partner.assign(n, -1);
  for (Vertex v = 0; v < static_cast<Vertex>(n); ++v) {
    if (d.triangle_of[static_cast<std::size_t>(v)] != -1) continue;
    auto nb = g.neighbors(v);
    // Claw-freeness and C4-freeness leave exactly one adjacent neighbor pair.
    std::optional<std::array<Vertex, 3>> tri;
    for (std::size_t i = 0; i < 3 && !tri; ++i) {
      for (std::size_t j = i + 1; j < 3 && !tri; ++j) {
        if (g.has_edge(nb[i], nb[j])) tri = std::array<Vertex, 3>{v, nb[i], nb[j]};
      }
    }
    if (!tri) throw Error(ErrorKind::NoTriangleAt, "vertex " + std::to_string(v) + " lies on no triangle", {v});
    std::sort(tri->begin(), tri->end());
    const int index = static_cast<int>(d.triangles.size());
    for (Vertex t : *tri) {
      if (d.triangle_of[static_cast<std::size_t>(t)] != -1) {
        throw Error(ErrorKind::StructureViolation, "triangles overlap", {tri->at(0), tri->at(1), tri->at(2)});
      }
      d.triangle_of[static_cast<std::size_t>(t)] = index;
    }
    d.triangles.push_back(*tri);
  }
  for (Vertex v = 0; v < static_cast<Vertex>(n); ++v) {
    const auto& tri = d.triangles[static_cast<std::size_t>(d.triangle_of[static_cast<std::size_t>(v)])];
    for (Vertex w : g.neighbors(v)) {
      if (std::find(tri.begin(), tri.end(), w) == tri.end()) d.partner[static_cast<std::size_t>(v)] = w;
    }
    const Vertex w = d.partner[static_cast<std::size_t>(v)];
    if (v < w) d.matching.emplace_back(v, w);
  }
  return d;
}

ContractionResult contract(const Graph& g) {
  ContractionResult r;
  r.decomposition = triangle_decomposition(g);
  const auto& d = r.decomposition;
  std::vector<Edge> links;
  links.reserve(d.matching.size());
  for (const Edge& e : d.matching) {
    links.emplace_back(d.triangle_of[static_cast<std::size_t>(e.u)], d.triangle_of[static_cast<std::size_t>(e.v)]);
  }
  std::sort(links.begin(), links.end());
  if (auto dup = std::adjacent_find(links.begin(), links.end()); dup != links.end()) {
    throw Error(ErrorKind::MultiLink, "two triangles are joined by more than one edge", {dup->u, dup->v});
  }
  r.quotient = Graph::from_edges(d.triangles.size(), links);
  return r;
}

Graph expand(const Graph& h) {
  if (!h.is_cubic()) throw Error(ErrorKind::NotCubic, "expansion needs a cubic graph");
  const auto n = static_cast<Vertex>(h.order());
  std::vector<Edge> edges;
  edges.reserve(h.size() + 3 * h.order());
  auto rank = [&](Vertex of, Vertex toward) {
    auto nb = h.neighbors(of);
    return static_cast<Vertex>(std::find(nb.begin(), nb.end(), toward) - nb.begin());
  };
  for (Vertex i = 0; i < n; ++i) {
    edges.emplace_back(3 * i, 3 * i + 1);
    edges.emplace_back(3 * i, 3 * i + 2);
    edges.emplace_back(3 * i + 1, 3 * i + 2);
  }
  for (const Edge& e : h.edges()) edges.emplace_back(3 * e.u + rank(e.u, e.v), 3 * e.v + rank(e.v, e.u));
  return Graph::from_edges(3 * h.order(), edges);
}

std::vector<Cycle> lift_cycle(const ContractionResult& r, const Cycle& c) {
  if (!is_cycle(r.quotient, c)) throw Error(ErrorKind::InvalidCycle, "not a cycle of the quotient", c.vertices);
  const auto& d = r.decomposition;

  // (from triangle, to triangle) -> (leaving vertex, entering vertex)
  std::map<std::pair<int, int>, std::pair<Vertex, Vertex>> link;
  for (const Edge& e : d.matching) {
    const int a = d.triangle_of[static_cast<std::size_t>(e.u)];
    const int b = d.triangle_of[static_cast<std::size_t>(e.v)];
    link.emplace(std::pair{a, b}, std::pair{e.u, e.v});
    link.emplace(std::pair{b, a}, std::pair{e.v, e.u});
  }

  const std::size_t k = c.length();
  std::vector<Vertex> entry(k), exit(k), third(k);
  for (std::size_t i = 0; i < k; ++i) {
    const int from = c.vertices[i];
    const int to = c.vertices[(i + 1) % k];
    auto [leave, enter] = link.at({from, to});
    exit[i] = leave;
    entry[(i + 1) % k] = enter;
  }
  for (std::size_t i = 0; i < k; ++i) {
    const auto& tri = d.triangles[static_cast<std::size_t>(c.vertices[i])];
    for (Vertex t : tri) {
      if (t != entry[i] && t != exit[i]) third[i] = t;
    }
  }

  std::vector<Cycle> out;
  out.reserve(k + 1);
  for (std::size_t detours = 0; detours <= k; ++detours) {
    Cycle cyc;
    cyc.vertices.reserve(2 * k + detours);
    for (std::size_t i = 0; i < k; ++i) {
      cyc.vertices.push_back(entry[i]);
      if (i < detours) cyc.vertices.push_back(third[i]);
      cyc.vertices.push_back(exit[i]);
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

}  // namespace clawcycles
