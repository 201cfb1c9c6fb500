#include "clawcycles/audit.hpp"

#include <algorithm>

#include "clawcycles/recognizers.hpp"

namespace clawcycles {

std::string_view to_string(Claim c) {
  switch (c) {
    case Claim::L1Independent: return "L1_independent";
    case Claim::L2AtMostOneEdge: return "L2_at_most_one_edge";
    case Claim::L3EdgeBound: return "L3_edge_bound";
    case Claim::NoSharedL4Neighbor: return "no_shared_L4_neighbor";
    case Claim::AtLeast38Vertices: return "at_least_38_vertices";
  }
  return "unknown";
}

std::string_view to_string(Verdict v) { return v == Verdict::Consistent ? "CONSISTENT" : "CONTRADICTION"; }

LevelProfile bfs_levels(const Graph& g, Vertex root) {
  if (!g.contains(root)) throw Error(ErrorKind::OutOfRange, "root not in graph", {root});
  const auto dist = bfs_distances(g, root);
  LevelProfile p;
  p.root = root;
  for (Vertex v = 0; v < static_cast<Vertex>(g.order()); ++v) {
    const int d = dist[static_cast<std::size_t>(v)];
    if (d < 0) continue;
    if (static_cast<std::size_t>(d) >= p.levels.size()) p.levels.resize(static_cast<std::size_t>(d) + 1);
    p.levels[static_cast<std::size_t>(d)].push_back(v);
  }
  p.induced_edges.assign(p.levels.size(), 0);
  for (const Edge& e : g.edges()) {
    const int du = dist[static_cast<std::size_t>(e.u)];
    if (du >= 0 && du == dist[static_cast<std::size_t>(e.v)]) ++p.induced_edges[static_cast<std::size_t>(du)];
  }
  if (p.levels.size() > 4) {
    for (Vertex c : p.levels[4]) {
      std::vector<Vertex> up;
      for (Vertex w : g.neighbors(c)) {
        if (dist[static_cast<std::size_t>(w)] == 3) up.push_back(w);
      }
      for (std::size_t i = 0; i < up.size(); ++i) {
        for (std::size_t j = i + 1; j < up.size(); ++j) p.cross_shared.push_back({up[i], up[j], c});
      }
    }
    std::sort(p.cross_shared.begin(), p.cross_shared.end());
  }
  return p;
}

std::optional<Cycle> find_forbidden_cycle(const Graph& g) {
  for (std::size_t len : kForbiddenLengths) {
    if (len > g.order()) break;
    if (auto c = has_cycle_of_length(g, len)) return c;
  }
  return std::nullopt;
}

AuditReport theorem9_audit(const Graph& g, Vertex root) {
  if (!g.is_cubic()) throw Error(ErrorKind::NotCubic, "audit needs a cubic graph");
  if (!is_connected(g)) throw Error(ErrorKind::Disconnected, "audit needs a connected graph");

  AuditReport r;
  r.profile = bfs_levels(g, root);
  const auto& p = r.profile;
  const auto forbidden = find_forbidden_cycle(g);
  r.forbidden_free = !forbidden;

  const std::size_t l2 = p.edges_in(2);
  const std::size_t l3 = p.edges_in(3);
  const bool l3_ok = l2 == 0 ? l3 <= 3 : (l2 == 1 ? l3 <= 1 : true);

  const std::pair<Claim, bool> checks[] = {
      {Claim::L1Independent, p.edges_in(1) == 0},
      {Claim::L2AtMostOneEdge, l2 <= 1},
      {Claim::L3EdgeBound, l3_ok},
      {Claim::NoSharedL4Neighbor, p.cross_shared.empty()},
      {Claim::AtLeast38Vertices, !r.forbidden_free || g.order() >= 38},
  };
  for (const auto& [claim, holds] : checks) {
    AuditEntry e{claim, holds, std::nullopt};
    if (!holds) e.fallback = forbidden;
    if (!e.sound()) r.verdict = Verdict::Contradiction;
    r.entries.push_back(std::move(e));
  }
  return r;
}

}  // namespace clawcycles
