#include "clawcycles/witnesses.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <string>

#include "clawcycles/holes.hpp"
#include "clawcycles/recognizers.hpp"

namespace clawcycles {

std::string_view to_string(CycleForm form) {
  return form == CycleForm::Pow2 ? "POW2" : "THREE_POW2";
}

std::uint64_t EGWitness::expected_length() const {
  const std::uint64_t p = std::uint64_t{1} << k;
  return form == CycleForm::Pow2 ? p : 3 * p;
}

std::optional<Target> power_of_two_in_interval(std::uint64_t lo, std::uint64_t hi) {
  if (lo > hi) return std::nullopt;
  const std::uint64_t p = std::bit_ceil(std::max<std::uint64_t>(lo, 4));
  if (p > hi) return std::nullopt;
  return Target{p, CycleForm::Pow2, std::countr_zero(p)};
}

std::optional<Target> target_in_interval(std::uint64_t lo, std::uint64_t hi) {
  if (lo < 3 || lo > hi) throw Error(ErrorKind::InvalidArgument, "target interval needs 3 <= lo <= hi");
  std::optional<Target> best = power_of_two_in_interval(lo, hi);
  // Smallest 3 * 2^k >= lo with k >= 1.
  const std::uint64_t base = std::bit_ceil(std::max<std::uint64_t>((lo + 2) / 3, 2));
  const std::uint64_t three = 3 * base;
  if (three <= hi && (!best || three < best->value)) best = Target{three, CycleForm::ThreePow2, std::countr_zero(base)};
  return best;
}

namespace {

void require_claw_free(const Graph& g) {
  if (auto claw = find_claw(g)) {
    throw Error(ErrorKind::ClawFound, "graph has an induced claw",
                {claw->center, claw->leaves[0], claw->leaves[1], claw->leaves[2]});
  }
}

void require_min_degree(const Graph& g, std::size_t d) {
  for (Vertex v = 0; v < static_cast<Vertex>(g.order()); ++v) {
    if (g.degree(v) < d) {
      throw Error(ErrorKind::MinDegree, "minimum degree below " + std::to_string(d), {v});
    }
  }
}

EGWitness validated(const Graph& g, Cycle c, const Target& t) {
  if (!is_cycle(g, c) || c.length() != t.value) {
    throw Error(ErrorKind::StructureViolation, "stretched cycle failed validation", c.vertices);
  }
  return EGWitness{std::move(c), t.k, t.form};
}

}  // namespace

EGWitness theorem1_witness(const Graph& g) {
  require_claw_free(g);
  if (g.order() == 0) throw Error(ErrorKind::MinDegree, "empty graph");
  require_min_degree(g, 3);

  if (auto c4 = find_c4(g)) return EGWitness{std::move(*c4), 2, CycleForm::Pow2};

  auto hole = smallest_hole(g);
  if (!hole || hole->length() < 5) {
    throw Error(ErrorKind::StructureViolation, "C4-free graph with minimum degree 3 has no hole of length >= 5");
  }
  const MarkedHole marked = mark_hole(g, *hole);
  const std::uint64_t s = hole->length();
  const auto target = target_in_interval(s, s + marked.detours.size());
  if (!target) {
    throw Error(ErrorKind::TargetMissing, "no 2^k or 3*2^k in [" + std::to_string(s) + ", " +
                                              std::to_string(s + marked.detours.size()) + "]");
  }
  return validated(g, marked.detour_cycle(static_cast<std::size_t>(target->value - s)), *target);
}

EGWitness theorem5_witness(const Graph& g, Vertex v) {
  if (!g.contains(v)) throw Error(ErrorKind::OutOfRange, "vertex " + std::to_string(v) + " not in graph", {v});
  require_claw_free(g);
  require_min_degree(g, 4);
  if (auto c4 = find_c4(g)) throw Error(ErrorKind::C4Found, "graph contains a 4-cycle", c4->vertices);
  const auto cuts = cut_vertices(g);
  if (std::binary_search(cuts.begin(), cuts.end(), v)) {
    throw Error(ErrorKind::CutVertex, "vertex " + std::to_string(v) + " is a cut vertex", {v});
  }

  for (Vertex x = 0; x < static_cast<Vertex>(g.order()); ++x) {
    if (g.degree(x) != 4) {
      throw Error(ErrorKind::StructureViolation, "claw-free C4-free graph with minimum degree 4 is not 4-regular", {x});
    }
  }

  // N(v) must split into two disjoint edges {w,u} and {x,y}.
  auto nb = g.neighbors(v);
  constexpr std::array<std::array<int, 4>, 3> pairings{{{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}}};
  std::optional<std::array<Vertex, 4>> wuxy;
  for (const auto& p : pairings) {
    const Vertex a = nb[static_cast<std::size_t>(p[0])], b = nb[static_cast<std::size_t>(p[1])];
    const Vertex c = nb[static_cast<std::size_t>(p[2])], d = nb[static_cast<std::size_t>(p[3])];
    if (g.has_edge(a, b) && g.has_edge(c, d)) {
      wuxy = std::array<Vertex, 4>{a, b, c, d};
      break;
    }
  }
  if (!wuxy) {
    throw Error(ErrorKind::StructureViolation, "neighborhood does not split into two disjoint edges",
                {v, nb[0], nb[1], nb[2], nb[3]});
  }
  const auto [w, u, x, y] = *wuxy;

  // Cross paths w-y, w-x, x-u, y-u in G - v; the first shortest one wins.
  const Vertex forbidden[] = {v};
  std::optional<Path> best;
  for (auto [a, b] : std::array<std::pair<Vertex, Vertex>, 4>{{{w, y}, {w, x}, {x, u}, {y, u}}}) {
    auto p = shortest_path(g, a, b, forbidden);
    if (p && (!best || p->length() < best->length())) best = std::move(p);
  }
  if (!best) throw Error(ErrorKind::CutVertex, "neighbors of v are disconnected in G - v", {v});

  Cycle hole{{v}};
  hole.vertices.insert(hole.vertices.end(), best->vertices.begin(), best->vertices.end());
  const std::size_t s = hole.length();
  if (s < 5 || !is_hole(g, hole)) {
    throw Error(ErrorKind::StructureViolation, "closed cross path is not a hole of length >= 5", hole.vertices);
  }
  if (auto shortest = smallest_hole_through(g, v); !shortest || shortest->length() != s) {
    throw Error(ErrorKind::StructureViolation, "closed cross path is not a smallest hole through v",
                shortest ? shortest->cycle().vertices : hole.vertices);
  }

  std::vector<Vertex> detours;
  detours.reserve(s);
  for (std::size_t i = 0; i < s; ++i) {
    const Vertex a = hole.vertices[i];
    const Vertex b = hole.vertices[(i + 1) % s];
    const auto status = triangulation_status(g, Edge(a, b));
    if (!status.detour) {
      throw Error(ErrorKind::StructureViolation, "hole edge is not uniquely triangulated", {a, b});
    }
    const Vertex z = *status.detour;
    const bool on_hole = std::find(hole.vertices.begin(), hole.vertices.end(), z) != hole.vertices.end();
    const bool repeated = std::find(detours.begin(), detours.end(), z) != detours.end();
    if (on_hole || repeated) {
      throw Error(ErrorKind::StructureViolation, "triangle vertex on the hole or shared by two hole edges",
                  {a, b, z});
    }
    detours.push_back(z);
  }

  const auto target = power_of_two_in_interval(s, 2 * s);
  if (!target) throw Error(ErrorKind::TargetMissing, "no power of two in [s, 2s]");
  const std::size_t t = static_cast<std::size_t>(target->value) - s;
  Cycle out;
  out.vertices.reserve(s + t);
  for (std::size_t i = 0; i < s; ++i) {
    out.vertices.push_back(hole.vertices[i]);
    if (i < t) out.vertices.push_back(detours[i]);
  }
  return validated(g, std::move(out), *target);
}

std::optional<int> conjecture8_exponent(std::uint64_t l) {
  if (l == 0) return std::nullopt;
  const std::uint64_t p = std::bit_ceil(2 * l);
  if (p < 3 * l) return std::countr_zero(p);
  return std::nullopt;
}

std::optional<Conjecture8Hit> conjecture8_check(const Graph& g) {
  if (!g.is_cubic()) throw Error(ErrorKind::NotCubic, "conjecture check needs a cubic graph");
  for (std::size_t l = 3; l <= g.order(); ++l) {
    const auto k = conjecture8_exponent(l);
    if (!k) continue;
    if (auto c = has_cycle_of_length(g, l)) return Conjecture8Hit{l, *k, std::move(*c)};
  }
  return std::nullopt;
}

}  // namespace clawcycles
