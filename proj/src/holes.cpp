#include "clawcycles/holes.hpp"

#include <algorithm>
#include <string>

#include "clawcycles/recognizers.hpp"
#include "cycle_search.hpp"

namespace clawcycles {

Hole::Hole(const Graph& g, Cycle c) : cycle_(std::move(c)) {
  if (!is_hole(g, cycle_)) throw Error(ErrorKind::NotAHole, "cycle is not a hole", cycle_.vertices);
}

Cycle MarkedHole::detour_cycle(std::size_t t) const {
  const auto& a = hole.cycle().vertices;
  const std::size_t s = a.size();
  t = std::min(t, detours.size());
  Cycle out;
  out.vertices.reserve(s + t);
  for (std::size_t k = 0; k < s; ++k) {
    out.vertices.push_back(a[k]);
    const std::size_t offset = (k + s - start) % s;
    if (offset % 2 == 0 && offset / 2 < t) out.vertices.push_back(detours[offset / 2]);
  }
  return out;
}

Cycle long_cycle_min_degree(const Graph& g) {
  if (g.order() == 0 || g.min_degree() < 2) {
    throw Error(ErrorKind::MinDegree, "long cycle needs minimum degree >= 2");
  }
  std::vector<Vertex> path{0};
  std::vector<int> position(g.order(), -1);
  position[0] = 0;
  for (;;) {
    const Vertex end = path.back();
    auto nb = g.neighbors(end);
    auto next = std::find_if(nb.begin(), nb.end(),
                             [&](Vertex w) { return position[static_cast<std::size_t>(w)] < 0; });
    if (next == nb.end()) break;
    position[static_cast<std::size_t>(*next)] = static_cast<int>(path.size());
    path.push_back(*next);
  }
  // Every neighbor of the end lies on the path; close at the farthest one.
  int farthest = static_cast<int>(path.size());
  for (Vertex w : g.neighbors(path.back())) farthest = std::min(farthest, position[static_cast<std::size_t>(w)]);
  return Cycle{{path.begin() + farthest, path.end()}};
}

Cycle chordless_descend(const Graph& g, const Cycle& c) {
  if (!is_cycle(g, c)) throw Error(ErrorKind::InvalidCycle, "input is not a cycle of the graph", c.vertices);
  Cycle current = c;
  while (auto chord = find_chord(g, current)) {
    const auto& v = current.vertices;
    auto i = static_cast<std::size_t>(std::find(v.begin(), v.end(), chord->u) - v.begin());
    auto j = static_cast<std::size_t>(std::find(v.begin(), v.end(), chord->v) - v.begin());
    if (i > j) std::swap(i, j);

    Cycle inner{{v.begin() + static_cast<long>(i), v.begin() + static_cast<long>(j) + 1}};
    Cycle outer{{v.begin() + static_cast<long>(j), v.end()}};
    outer.vertices.insert(outer.vertices.end(), v.begin(), v.begin() + static_cast<long>(i) + 1);

    const bool inner_long = inner.length() >= 5;
    const bool outer_long = outer.length() >= 5;
    if (inner_long != outer_long) {
      current = inner_long ? std::move(inner) : std::move(outer);
      continue;
    }
    if (inner.length() != outer.length()) {
      current = inner.length() < outer.length() ? std::move(inner) : std::move(outer);
      continue;
    }
    auto si = inner.vertices;
    auto so = outer.vertices;
    std::sort(si.begin(), si.end());
    std::sort(so.begin(), so.end());
    current = si <= so ? std::move(inner) : std::move(outer);
  }
  return current;
}

std::optional<Hole> smallest_hole(const Graph& g) {
  for (std::size_t len = 4; len <= g.order(); ++len) {
    if (auto c = detail::find_cycle_exact(g, len, true)) return Hole(g, std::move(*c));
  }
  return std::nullopt;
}

std::optional<Hole> smallest_hole_through(const Graph& g, Vertex v) {
  if (!g.contains(v)) throw Error(ErrorKind::OutOfRange, "vertex " + std::to_string(v) + " not in graph", {v});
  for (std::size_t len = 4; len <= g.order(); ++len) {
    detail::ExactCycleFinder finder(g, len, true);
    if (auto c = finder.through(v, 0)) return Hole(g, std::move(*c));
  }
  return std::nullopt;
}

namespace {

void require_marking_hypotheses(const Graph& g, const Hole& h) {
  if (auto claw = find_claw(g)) {
    throw Error(ErrorKind::ClawFound, "graph has an induced claw",
                {claw->center, claw->leaves[0], claw->leaves[1], claw->leaves[2]});
  }
  if (g.min_degree() < 3) {
    const auto n = static_cast<Vertex>(g.order());
    Vertex low = 0;
    for (Vertex v = 0; v < n; ++v) {
      if (g.degree(v) < 3) {
        low = v;
        break;
      }
    }
    throw Error(ErrorKind::MinDegree, "minimum degree below 3", {low});
  }
  if (auto c4 = find_c4(g)) throw Error(ErrorKind::C4Found, "graph contains a 4-cycle", c4->vertices);
  if (!is_hole(g, h.cycle())) throw Error(ErrorKind::NotAHole, "cycle is not a hole of this graph", h.cycle().vertices);
  if (auto smaller = smallest_hole(g); smaller && smaller->length() < h.length()) {
    throw Error(ErrorKind::NotSmallestHole, "a shorter hole exists", smaller->cycle().vertices);
  }
}

}  // namespace

MarkedHole mark_hole(const Graph& g, const Hole& h) {
  require_marking_hypotheses(g, h);

  const auto& a = h.cycle().vertices;
  const std::size_t s = a.size();
  std::vector<int> position(g.order(), -1);
  for (std::size_t i = 0; i < s; ++i) position[static_cast<std::size_t>(a[i])] = static_cast<int>(i);

  // Every off-hole neighbor b of a_i sees a_{i-1} or a_{i+1}, and sees no
  // hole vertex two or more steps away from a_i.
  for (std::size_t i = 0; i < s; ++i) {
    for (Vertex b : g.neighbors(a[i])) {
      if (position[static_cast<std::size_t>(b)] >= 0) continue;
      std::vector<std::size_t> seen;
      for (Vertex w : g.neighbors(b)) {
        if (int p = position[static_cast<std::size_t>(w)]; p >= 0) seen.push_back(static_cast<std::size_t>(p));
      }
      const bool consecutive =
          seen.size() == 2 && ((seen[0] + 1) % s == seen[1] || (seen[1] + 1) % s == seen[0]);
      if (!consecutive) {
        std::vector<Vertex> evidence{b};
        for (std::size_t p : seen) evidence.push_back(a[p]);
        throw Error(ErrorKind::StructureViolation,
                    "off-hole neighbor does not attach to exactly one hole edge", evidence);
      }
    }
  }

  // Third vertex per hole edge (a_i, a_{i+1}); unique because the graph is C4-free.
  std::vector<std::optional<Vertex>> third(s);
  for (std::size_t i = 0; i < s; ++i) third[i] = triangulation_status(g, Edge(a[i], a[(i + 1) % s])).detour;

  for (std::size_t i = 0; i < s; ++i) {
    if (!third[i] && !third[(i + s - 1) % s]) {
      throw Error(ErrorKind::StructureViolation, "hole vertex lies on no triangulated hole edge", {a[i]});
    }
  }
  if (s % 2 != 0) throw Error(ErrorKind::StructureViolation, "smallest hole has odd length", a);

  std::vector<Vertex> failure;
  for (std::size_t start = 0; start < 2; ++start) {
    MarkedHole out{h, start, {}, {}};
    bool ok = true;
    for (std::size_t i = start; i < s && ok; i += 2) {
      if (!third[i]) {
        ok = false;
        failure = {a[i], a[(i + 1) % s]};
        break;
      }
      if (std::find(out.detours.begin(), out.detours.end(), *third[i]) != out.detours.end()) {
        ok = false;
        failure = {a[i], a[(i + 1) % s], *third[i]};
        break;
      }
      out.marked.emplace_back(a[i], a[(i + 1) % s]);
      out.detours.push_back(*third[i]);
    }
    if (ok) return out;
  }
  throw Error(ErrorKind::StructureViolation, "no alternating marking with distinct detours", failure);
}

bool is_valid_marked_hole(const Graph& g, const MarkedHole& m) {
  const auto& a = m.hole.cycle().vertices;
  const std::size_t s = a.size();
  if (!is_hole(g, m.hole.cycle()) || s % 2 != 0 || m.start > 1) return false;
  if (m.marked.size() != s / 2 || m.detours.size() != s / 2) return false;
  std::vector<Vertex> sorted_detours = m.detours;
  std::sort(sorted_detours.begin(), sorted_detours.end());
  if (std::adjacent_find(sorted_detours.begin(), sorted_detours.end()) != sorted_detours.end()) return false;
  for (std::size_t i = 0; i < s / 2; ++i) {
    const std::size_t p = (m.start + 2 * i) % s;
    if (m.marked[i] != Edge(a[p], a[(p + 1) % s])) return false;
    const Vertex z = m.detours[i];
    if (std::find(a.begin(), a.end(), z) != a.end()) return false;
    if (!g.has_edge(z, a[p]) || !g.has_edge(z, a[(p + 1) % s])) return false;
  }
  return true;
}

}  // namespace clawcycles
