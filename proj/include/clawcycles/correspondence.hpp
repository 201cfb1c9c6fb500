#ifndef CLAWCYCLES_CORRESPONDENCE_HPP
#define CLAWCYCLES_CORRESPONDENCE_HPP

#include <array>
#include <vector>

#include "clawcycles/graph.hpp"

namespace clawcycles {

// Cubic claw-free C4-free graphs are exactly the graphs obtained from
// simple cubic graphs by blowing every vertex up into a triangle. This
// module converts between the two sides and lifts quotient cycles.

/// Vertex-disjoint triangles covering V plus the perfect matching between them.
struct TriangleDecomposition {
  std::vector<std::array<Vertex, 3>> triangles;  // sorted triples, ordered by smallest vertex
  std::vector<Edge> matching;                    // one edge per pair of matched vertices
  std::vector<int> triangle_of;                  // vertex -> triangle index
  std::vector<Vertex> partner;                   // vertex -> its matched vertex
};

struct ContractionResult {
  Graph quotient;
  TriangleDecomposition decomposition;
};

/// Throws NotCubic, ClawFound, C4Found or NoTriangleAt, checked in that order.
TriangleDecomposition triangle_decomposition(const Graph& g);

/// Shrinks every triangle to a vertex. Triangle i becomes quotient vertex i.
ContractionResult contract(const Graph& g);

/// Vertex i becomes the triangle {3i, 3i+1, 3i+2}; vertex 3i+r carries the
/// edge toward the r-th smallest neighbor of i. Throws Error{NotCubic}.
Graph expand(const Graph& h);

/// For a k-cycle of the quotient returns k+1 cycles of the original graph
/// with lengths 2k, 2k+1, ..., 3k (in that order). The base cycle uses one
/// matching edge and one triangle edge per quotient edge; the j-th result
/// takes the long way around the first j triangles.
std::vector<Cycle> lift_cycle(const ContractionResult& r, const Cycle& c);

}  // namespace clawcycles

#endif  // CLAWCYCLES_CORRESPONDENCE_HPP
