#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <vector>

#include "chromzero/graph.hpp"

namespace chromzero {

/// Spanning tree of a host graph, rooted, with predecessor and generation
/// number (tree distance to the root) for every vertex.
class RootedSpanningTree {
 public:
  /// Throws std::invalid_argument unless `edges` form a spanning tree of *host.
  RootedSpanningTree(std::shared_ptr<const Graph> host, std::vector<Edge> edges, Vertex root = 0);

  const Graph& host() const noexcept { return *host_; }
  Vertex root() const noexcept { return root_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  /// -1 for the root.
  Vertex parent(Vertex v) const { return parent_.at(static_cast<std::size_t>(v)); }
  int depth(Vertex v) const { return depth_.at(static_cast<std::size_t>(v)); }

 private:
  std::shared_ptr<const Graph> host_;
  std::vector<Edge> edges_;
  Vertex root_;
  std::vector<Vertex> parent_;
  std::vector<int> depth_;
};

/// Visits every spanning tree exactly once. Edges are decided in order: an
/// edge is taken when it joins two fragments and skipped only when the
/// remaining edges still connect the graph, so bridges are always taken and no
/// branch dead-ends. Throws std::invalid_argument for disconnected or empty graphs.
void for_each_spanning_tree(std::shared_ptr<const Graph> g, Vertex root,
                            const std::function<void(const RootedSpanningTree&)>& visit);
std::vector<RootedSpanningTree> enumerate_spanning_trees(const Graph& g, Vertex root = 0);

enum class TreeClass {
  penrose,              ///< (t1) and (t2) hold, which implies weakly Penrose
  weakly_penrose_only,  ///< no host edge joins two children of one parent, but (t1) or (t2) fails
  neither,
};

/// Penrose: no host edge joins two vertices of equal generation, and no host
/// edge {i,j} has depth(j) = depth(i) - 1 with j > parent(i).
/// Weakly Penrose: no host edge joins two vertices with the same parent.
TreeClass classify_tree(const RootedSpanningTree& tree);

/// Sum over connected spanning subgraphs G' of (-1)^|E(G')|, by include/exclude
/// recursion over the edges that never drops an edge whose removal disconnects
/// what is left. Independent of the tree route above.
/// Throws std::invalid_argument when g is disconnected and ResourceError when
/// g has more than max_edges edges.
std::int64_t signed_connected_sum(const Graph& g, int max_edges = 24);

struct PenroseReport {
  Vertex root = 0;
  std::int64_t s_value = 0;
  std::uint64_t tree_count = 0;
  std::uint64_t penrose_count = 0;
  std::uint64_t weak_penrose_count = 0;

  /// S = (-1)^(n-1) |P| and |P| <= |P̄| <= |T|.
  bool identity_holds(int num_vertices) const;
  bool chain_holds() const;
};

PenroseReport penrose_report(const Graph& g, Vertex root = 0, int max_edges = 24);

/// One report per choice of root; the weakly Penrose count may depend on it.
std::vector<PenroseReport> penrose_reports_by_root(const Graph& g, int max_edges = 24);

}  // namespace chromzero
