#include <set>

#include "clawcycles/canonical.hpp"
#include "clawcycles/correspondence.hpp"
#include "clawcycles/enumerate.hpp"
#include "clawcycles/fixtures.hpp"
#include "clawcycles/recognizers.hpp"
#include "doctest.h"
#include "support/expect.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace clawcycles;

namespace {

void check_decomposition(const Graph& g, const TriangleDecomposition& d) {
  CHECK(d.triangles.size() * 3 == g.order());
  CHECK(d.matching.size() * 2 == g.order());
  std::set<Edge> covered;
  for (std::size_t i = 0; i < d.triangles.size(); ++i) {
    const auto& t = d.triangles[i];
    CHECK(g.has_edge(t[0], t[1]));
    CHECK(g.has_edge(t[0], t[2]));
    CHECK(g.has_edge(t[1], t[2]));
    for (Vertex v : t) CHECK(d.triangle_of[static_cast<std::size_t>(v)] == static_cast<int>(i));
    covered.insert({Edge(t[0], t[1]), Edge(t[0], t[2]), Edge(t[1], t[2])});
  }
  std::set<std::pair<int, int>> links;
  for (const Edge& e : d.matching) {
    const int a = d.triangle_of[static_cast<std::size_t>(e.u)];
    const int b = d.triangle_of[static_cast<std::size_t>(e.v)];
    CHECK(a != b);
    CHECK(links.emplace(std::min(a, b), std::max(a, b)).second);
    CHECK(d.partner[static_cast<std::size_t>(e.u)] == e.v);
    CHECK(d.partner[static_cast<std::size_t>(e.v)] == e.u);
    covered.insert(e);
  }
  const auto edges = g.edges();
  CHECK(covered == std::set<Edge>(edges.begin(), edges.end()));
}

}  // namespace

TEST_CASE("triangle_decomposition") {
  const Graph tt = fixtures::trunc_tet();
  const auto d = triangle_decomposition(tt);
  CHECK(d.triangles.size() == 4);
  CHECK(d.matching.size() == 6);
  check_decomposition(tt, d);

  CHECK(error_kind([] { triangle_decomposition(fixtures::prism()); }) == ErrorKind::C4Found);
  CHECK(error_kind([] { triangle_decomposition(fixtures::petersen()); }) == ErrorKind::ClawFound);
  CHECK(error_kind([] { triangle_decomposition(fixtures::c5()); }) == ErrorKind::NotCubic);
  CHECK(error_kind([] { triangle_decomposition(fixtures::k4()); }) == ErrorKind::C4Found);
}

TEST_CASE("contract") {
  const auto tt = contract(fixtures::trunc_tet());
  CHECK(isomorphic(tt.quotient, fixtures::k4()));
  const auto p = contract(expand(fixtures::petersen()));
  CHECK(isomorphic(p.quotient, fixtures::petersen()));
  CHECK(p.quotient.is_cubic());
  CHECK(error_kind([] { contract(fixtures::k4()); }) == ErrorKind::C4Found);
}

TEST_CASE("expand") {
  const Graph tt = expand(fixtures::k4());
  CHECK(tt.order() == 12);
  const auto s = cycle_spectrum(tt);
  CHECK(s.contains(3));
  CHECK(s.contains(6));
  for (const Graph& h : {fixtures::petersen(), fixtures::k33()}) {
    const Graph g = expand(h);
    CHECK(g.order() == 3 * h.order());
    CHECK(g.is_cubic());
    CHECK(is_claw_free(g));
    CHECK_FALSE(find_c4(g));
  }
  // Vertex 3i + r carries the edge toward the r-th smallest neighbor of i.
  const Graph k4 = fixtures::k4();
  const Graph e = expand(k4);
  CHECK(e.has_edge(0, 3));   // 0 -> 1 (rank 0), 1 -> 0 (rank 0)
  CHECK(e.has_edge(2, 9));   // 0 -> 3 (rank 2), 3 -> 0 (rank 0)
  CHECK(e.has_edge(11, 8));  // 3 -> 2 (rank 2), 2 -> 3 (rank 2)
  CHECK(error_kind([] { expand(fixtures::c5()); }) == ErrorKind::NotCubic);
}

TEST_CASE("expand then contract is the identity up to isomorphism") {
  gen::Rng rng(47);
  for (std::size_t n : {4u, 6u, 8u, 10u}) {
    for (const Graph& h : enumerate_cubic_graphs(n, true)) {
      const Graph g = expand(h);
      CHECK(is_claw_free(g));
      CHECK_FALSE(find_c4(g));
      const Graph relabeled = gen::shuffled(g, rng);
      const auto r = contract(relabeled);
      check_decomposition(relabeled, r.decomposition);
      CHECK(canonical_cert(r.quotient) == canonical_cert(h));
    }
  }
}

TEST_CASE("lift_cycle examples") {
  const auto r = contract(fixtures::trunc_tet());
  const auto tri = has_cycle_of_length(r.quotient, 3);
  REQUIRE(tri);
  const auto lifted = lift_cycle(r, *tri);
  REQUIRE(lifted.size() == 4);
  for (std::size_t j = 0; j < 4; ++j) {
    CHECK(lifted[j].length() == 6 + j);
    CHECK(oracle::is_valid_cycle(fixtures::trunc_tet(), lifted[j].vertices));
  }

  const Graph ep = expand(fixtures::petersen());
  const auto rp = contract(ep);
  for (std::size_t k : {5u, 6u}) {
    const auto c = has_cycle_of_length(rp.quotient, k);
    REQUIRE(c);
    const auto cycles = lift_cycle(rp, *c);
    REQUIRE(cycles.size() == k + 1);
    for (std::size_t j = 0; j <= k; ++j) {
      CHECK(cycles[j].length() == 2 * k + j);
      CHECK(oracle::is_valid_cycle(ep, cycles[j].vertices));
    }
    if (k == 6) CHECK(cycles[4].length() == 16);
  }
  CHECK(error_kind([&] { lift_cycle(rp, Cycle{{0, 1, 2}}); }) == ErrorKind::InvalidCycle);
}
