#ifndef CLAWCYCLES_FIXTURES_HPP
#define CLAWCYCLES_FIXTURES_HPP

#include <string_view>
#include <vector>

#include "clawcycles/graph.hpp"

namespace clawcycles::fixtures {

Graph complete(std::size_t n);
Graph cycle(std::size_t n);
Graph path(std::size_t n);
Graph complete_bipartite(std::size_t a, std::size_t b);

Graph k3();
Graph k4();
Graph c5();
/// Two triangles {0,1,2}, {3,4,5} joined by i -- i+3.
Graph prism();
/// 3-cube; vertices are bit masks, adjacent when they differ in one bit.
Graph cube();
/// Outer 5-cycle 0..4, spokes i -- i+5, inner pentagram on 5..9.
Graph petersen();
Graph k33();
/// expand(K4): the truncated tetrahedron.
Graph trunc_tet();
Graph l_petersen();

/// Named fixture lookup ("K3", "K4", "C5", "PRISM", "CUBE", "PETERSEN",
/// "K33", "TRUNC_TET", "L_PETERSEN"); throws Error{InvalidArgument}.
Graph by_name(std::string_view name);
std::vector<std::string_view> names();

}  // namespace clawcycles::fixtures

#endif  // CLAWCYCLES_FIXTURES_HPP
