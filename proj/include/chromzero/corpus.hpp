#pragma once

#include <string>
#include <vector>

#include "chromzero/graph.hpp"

namespace chromzero {

/// Isomorphism-distinct connected graphs on exactly n vertices (1 <= n <= 9),
/// in canonical labeling. Built by attaching a new vertex to every nonempty
/// neighbor set of each connected graph on n-1 vertices and deduplicating by
/// canonical form; every connected graph has a non-cut vertex, so nothing is missed.
std::vector<Graph> connected_graphs(int n);

/// Isomorphism-distinct graphs (connected or not) on exactly n vertices (0 <= n <= 9).
std::vector<Graph> all_graphs(int n);

struct NamedGraph {
  std::string id;
  Graph graph;
};

/// Named generator instances with at most max_vertices vertices: complete
/// graphs, cycles, paths, stars, small grids, the Petersen graph and a few
/// seeded random-regular graphs.
std::vector<NamedGraph> named_corpus(int max_vertices = 12);

}  // namespace chromzero
