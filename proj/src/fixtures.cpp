#include "clawcycles/fixtures.hpp"

#include <string>

#include "clawcycles/correspondence.hpp"

namespace clawcycles::fixtures {

Graph complete(std::size_t n) {
  std::vector<Edge> es;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) es.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
  }
  return Graph::from_edges(n, es);
}

Graph cycle(std::size_t n) {
  std::vector<Edge> es;
  for (std::size_t i = 0; i < n; ++i) es.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n));
  return Graph::from_edges(n, es);
}

Graph path(std::size_t n) {
  std::vector<Edge> es;
  for (std::size_t i = 0; i + 1 < n; ++i) es.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(i + 1));
  return Graph::from_edges(n, es);
}

Graph complete_bipartite(std::size_t a, std::size_t b) {
  std::vector<Edge> es;
  for (std::size_t i = 0; i < a; ++i) {
    for (std::size_t j = 0; j < b; ++j) es.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(a + j));
  }
  return Graph::from_edges(a + b, es);
}

Graph k3() { return complete(3); }
Graph k4() { return complete(4); }
Graph c5() { return cycle(5); }
Graph k33() { return complete_bipartite(3, 3); }

Graph prism() {
  return Graph::from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
}

Graph cube() {
  std::vector<Edge> es;
  for (Vertex v = 0; v < 8; ++v) {
    for (int bit = 0; bit < 3; ++bit) {
      const Vertex w = v ^ (1 << bit);
      if (v < w) es.emplace_back(v, w);
    }
  }
  return Graph::from_edges(8, es);
}

Graph petersen() {
  std::vector<Edge> es;
  for (Vertex i = 0; i < 5; ++i) {
    es.emplace_back(i, (i + 1) % 5);
    es.emplace_back(i, i + 5);
    es.emplace_back(i + 5, (i + 2) % 5 + 5);
  }
  return Graph::from_edges(10, es);
}

Graph trunc_tet() { return expand(k4()); }

Graph l_petersen() { return line_graph(petersen()); }

namespace {

struct Named {
  std::string_view name;
  Graph (*make)();
};

constexpr Named kFixtures[] = {
    {"K3", k3},           {"K4", k4},           {"C5", c5},
    {"PRISM", prism},     {"CUBE", cube},       {"PETERSEN", petersen},
    {"K33", k33},         {"TRUNC_TET", trunc_tet}, {"L_PETERSEN", l_petersen},
};

}  // namespace

Graph by_name(std::string_view name) {
  for (const auto& f : kFixtures) {
    if (f.name == name) return f.make();
  }
  throw Error(ErrorKind::InvalidArgument, "unknown fixture '" + std::string(name) + "'");
}

std::vector<std::string_view> names() {
  std::vector<std::string_view> out;
  for (const auto& f : kFixtures) out.push_back(f.name);
  return out;
}

}  // namespace clawcycles::fixtures
