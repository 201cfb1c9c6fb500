#include "clawcycles/graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

namespace clawcycles {

namespace {

void check_vertex(std::size_t n, Vertex v) {
  if (v < 0 || static_cast<std::size_t>(v) >= n) {
    throw Error(ErrorKind::OutOfRange,
                "vertex " + std::to_string(v) + " outside 0.." + std::to_string(n) + "-1", {v});
  }
}

std::vector<char> mask_of(std::size_t n, std::span<const Vertex> vertices) {
  std::vector<char> mask(n, 0);
  for (Vertex v : vertices) {
    check_vertex(n, v);
    mask[static_cast<std::size_t>(v)] = 1;
  }
  return mask;
}

}  // namespace

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  Graph g(n);
  for (const Edge& e : edges) {
    check_vertex(n, e.u);
    check_vertex(n, e.v);
    if (e.u == e.v) {
      throw Error(ErrorKind::LoopEdge, "loop at vertex " + std::to_string(e.u), {e.u});
    }
    g.adj_[static_cast<std::size_t>(e.u)].push_back(e.v);
    g.adj_[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  std::size_t twice = 0;
  for (auto& row : g.adj_) {
    std::sort(row.begin(), row.end());
    row.erase(std::unique(row.begin(), row.end()), row.end());
    twice += row.size();
  }
  g.edge_count_ = twice / 2;
  return g;
}

Graph Graph::from_edges(std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> edges) {
  std::vector<Edge> list;
  list.reserve(edges.size());
  for (auto [a, b] : edges) {
    if (a == b) throw Error(ErrorKind::LoopEdge, "loop at vertex " + std::to_string(a), {a});
    list.emplace_back(a, b);
  }
  return from_edges(n, list);
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (!contains(u) || !contains(v)) return false;
  const auto& row = adj_[static_cast<std::size_t>(u)];
  return std::binary_search(row.begin(), row.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (std::size_t u = 0; u < adj_.size(); ++u) {
    for (Vertex v : adj_[u]) {
      if (static_cast<std::size_t>(v) > u) out.emplace_back(static_cast<Vertex>(u), v);
    }
  }
  return out;
}

std::size_t Graph::min_degree() const {
  if (adj_.empty()) return 0;
  std::size_t d = adj_[0].size();
  for (const auto& row : adj_) d = std::min(d, row.size());
  return d;
}

std::size_t Graph::max_degree() const {
  std::size_t d = 0;
  for (const auto& row : adj_) d = std::max(d, row.size());
  return d;
}

bool Graph::is_regular(std::size_t d) const {
  return std::all_of(adj_.begin(), adj_.end(), [d](const auto& row) { return row.size() == d; });
}

Graph Graph::relabeled(std::span<const Vertex> perm) const {
  if (perm.size() != order()) {
    throw Error(ErrorKind::InvalidArgument, "permutation size does not match graph order");
  }
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (const Edge& e : edges()) {
    out.emplace_back(perm[static_cast<std::size_t>(e.u)], perm[static_cast<std::size_t>(e.v)]);
  }
  return from_edges(order(), out);
}

Graph Graph::induced(std::span<const Vertex> keep) const {
  std::vector<Vertex> index(order(), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    check_vertex(order(), keep[i]);
    index[static_cast<std::size_t>(keep[i])] = static_cast<Vertex>(i);
  }
  std::vector<Edge> out;
  for (std::size_t i = 0; i < keep.size(); ++i) {
    for (Vertex w : neighbors(keep[i])) {
      Vertex j = index[static_cast<std::size_t>(w)];
      if (j > static_cast<Vertex>(i)) out.emplace_back(static_cast<Vertex>(i), j);
    }
  }
  return from_edges(keep.size(), out);
}

bool is_path(const Graph& g, const Path& p) {
  if (p.vertices.empty()) return false;
  std::vector<char> seen(g.order(), 0);
  for (std::size_t i = 0; i < p.vertices.size(); ++i) {
    Vertex v = p.vertices[i];
    if (!g.contains(v) || seen[static_cast<std::size_t>(v)]) return false;
    seen[static_cast<std::size_t>(v)] = 1;
    if (i > 0 && !g.has_edge(p.vertices[i - 1], v)) return false;
  }
  return true;
}

bool is_cycle(const Graph& g, const Cycle& c) {
  if (c.vertices.size() < 3) return false;
  if (!is_path(g, Path{c.vertices})) return false;
  return g.has_edge(c.vertices.back(), c.vertices.front());
}

std::optional<Edge> find_chord(const Graph& g, const Cycle& c) {
  const std::size_t len = c.vertices.size();
  std::optional<Edge> best;
  for (std::size_t i = 0; i < len; ++i) {
    for (std::size_t j = i + 2; j < len; ++j) {
      if (i == 0 && j == len - 1) continue;
      if (g.has_edge(c.vertices[i], c.vertices[j])) {
        Edge e(c.vertices[i], c.vertices[j]);
        if (!best || e < *best) best = e;
      }
    }
  }
  return best;
}

bool is_hole(const Graph& g, const Cycle& c) {
  return c.length() >= 4 && is_cycle(g, c) && !find_chord(g, c);
}

Components connected_components(const Graph& g, std::span<const Vertex> removed) {
  const std::size_t n = g.order();
  const auto gone = mask_of(n, removed);
  Components out;
  out.label.assign(n, -1);
  std::vector<Vertex> stack;
  for (std::size_t s = 0; s < n; ++s) {
    if (gone[s] || out.label[s] != -1) continue;
    out.label[s] = out.count;
    stack.push_back(static_cast<Vertex>(s));
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(v)) {
        auto wi = static_cast<std::size_t>(w);
        if (!gone[wi] && out.label[wi] == -1) {
          out.label[wi] = out.count;
          stack.push_back(w);
        }
      }
    }
    ++out.count;
  }
  return out;
}

bool is_connected(const Graph& g) {
  if (g.order() <= 1) return true;
  const auto dist = bfs_distances(g, 0);
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

std::vector<Vertex> cut_vertices(const Graph& g) {
  // Iterative Hopcroft-Tarjan low-link.
  const std::size_t n = g.order();
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<Vertex> parent(n, -1);
  std::vector<char> is_cut(n, 0);
  int timer = 0;

  struct Frame {
    Vertex v;
    std::size_t next;
    int children;
  };
  std::vector<Frame> stack;

  for (std::size_t root = 0; root < n; ++root) {
    if (disc[root] != -1) continue;
    disc[root] = low[root] = timer++;
    stack.push_back({static_cast<Vertex>(root), 0, 0});
    while (!stack.empty()) {
      Frame& f = stack.back();
      auto vi = static_cast<std::size_t>(f.v);
      auto nbrs = g.neighbors(f.v);
      if (f.next < nbrs.size()) {
        Vertex w = nbrs[f.next++];
        auto wi = static_cast<std::size_t>(w);
        if (disc[wi] == -1) {
          parent[wi] = f.v;
          disc[wi] = low[wi] = timer++;
          ++f.children;
          stack.push_back({w, 0, 0});
        } else if (w != parent[vi]) {
          low[vi] = std::min(low[vi], disc[wi]);
        }
        continue;
      }
      const Frame done = f;
      stack.pop_back();
      if (stack.empty()) {
        if (done.children >= 2) is_cut[vi] = 1;
        continue;
      }
      auto pi = static_cast<std::size_t>(stack.back().v);
      low[pi] = std::min(low[pi], low[vi]);
      if (parent[pi] != -1 && low[vi] >= disc[pi]) is_cut[pi] = 1;
    }
  }

  std::vector<Vertex> out;
  for (std::size_t v = 0; v < n; ++v) {
    if (is_cut[v]) out.push_back(static_cast<Vertex>(v));
  }
  return out;
}

std::vector<int> bfs_distances(const Graph& g, Vertex source, std::span<const Vertex> forbidden) {
  const std::size_t n = g.order();
  check_vertex(n, source);
  const auto blocked = mask_of(n, forbidden);
  std::vector<int> dist(n, -1);
  if (blocked[static_cast<std::size_t>(source)]) return dist;
  std::deque<Vertex> queue{source};
  dist[static_cast<std::size_t>(source)] = 0;
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(v)) {
      auto wi = static_cast<std::size_t>(w);
      if (blocked[wi] || dist[wi] != -1) continue;
      dist[wi] = dist[static_cast<std::size_t>(v)] + 1;
      queue.push_back(w);
    }
  }
  return dist;
}

std::optional<Path> shortest_path(const Graph& g, Vertex u, Vertex v, std::span<const Vertex> forbidden) {
  const std::size_t n = g.order();
  check_vertex(n, u);
  check_vertex(n, v);
  const auto blocked = mask_of(n, forbidden);
  if (blocked[static_cast<std::size_t>(u)] || blocked[static_cast<std::size_t>(v)]) {
    throw Error(ErrorKind::InvalidArgument, "path endpoint is forbidden");
  }
  std::vector<Vertex> parent(n, -1);
  std::vector<char> seen(n, 0);
  std::deque<Vertex> queue{u};
  seen[static_cast<std::size_t>(u)] = 1;
  while (!queue.empty() && !seen[static_cast<std::size_t>(v)]) {
    Vertex x = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(x)) {
      auto wi = static_cast<std::size_t>(w);
      if (blocked[wi] || seen[wi]) continue;
      seen[wi] = 1;
      parent[wi] = x;
      queue.push_back(w);
    }
  }
  if (!seen[static_cast<std::size_t>(v)]) return std::nullopt;
  Path p;
  for (Vertex x = v; x != -1; x = parent[static_cast<std::size_t>(x)]) p.vertices.push_back(x);
  std::reverse(p.vertices.begin(), p.vertices.end());
  return p;
}

Graph line_graph(const Graph& g) {
  const auto es = g.edges();
  std::vector<std::vector<Vertex>> incident(g.order());
  for (std::size_t i = 0; i < es.size(); ++i) {
    incident[static_cast<std::size_t>(es[i].u)].push_back(static_cast<Vertex>(i));
    incident[static_cast<std::size_t>(es[i].v)].push_back(static_cast<Vertex>(i));
  }
  std::vector<Edge> out;
  for (const auto& inc : incident) {
    for (std::size_t a = 0; a < inc.size(); ++a) {
      for (std::size_t b = a + 1; b < inc.size(); ++b) out.emplace_back(inc[a], inc[b]);
    }
  }
  return Graph::from_edges(es.size(), out);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  auto es = a.edges();
  const auto shift = static_cast<Vertex>(a.order());
  for (const Edge& e : b.edges()) es.emplace_back(e.u + shift, e.v + shift);
  return Graph::from_edges(a.order() + b.order(), es);
}

}  // namespace clawcycles
