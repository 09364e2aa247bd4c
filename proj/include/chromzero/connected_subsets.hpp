#pragma once

#include <functional>
#include <vector>

#include "chromzero/graph.hpp"

namespace chromzero {

/// Calls `visit` once for every vertex set of cardinality `size` that contains
/// `root` and induces a connected subgraph. Requires at most 64 vertices.
///
/// Sets are grown from {root} by binary include/exclude decisions on frontier
/// vertices; an excluded vertex is never reconsidered on that branch, so no set
/// is produced twice.
void for_each_connected_subset(const Graph& g, Vertex root, int size,
                               const std::function<void(VertexSet)>& visit);

std::vector<VertexSet> enumerate_connected_subsets(const Graph& g, Vertex root, int size);

/// Every connected vertex set of the given size, each reported once (keyed by
/// its lowest vertex).
std::vector<VertexSet> all_connected_subsets(const Graph& g, int size);

bool induces_connected(const Graph& g, VertexSet set);

}  // namespace chromzero
