#ifndef CLAWCYCLES_ENUMERATE_HPP
#define CLAWCYCLES_ENUMERATE_HPP

#include <cstddef>
#include <functional>
#include <vector>

#include "clawcycles/graph.hpp"

namespace clawcycles {

/// One canonical representative per isomorphism class of cubic graphs on
/// n vertices, sorted by certificate. Connected graphs come from a
/// breadth-first completion search; disconnected ones are unions of
/// smaller connected classes. Throws Error{InvalidArgument} for odd n or
/// n < 4.
std::vector<Graph> enumerate_cubic_graphs(std::size_t n, bool connected_only);

/// Streams the same classes to `sink`.
void for_each_cubic_graph(std::size_t n, bool connected_only, const std::function<void(const Graph&)>& sink);

}  // namespace clawcycles

#endif  // CLAWCYCLES_ENUMERATE_HPP
