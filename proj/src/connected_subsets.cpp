#include "chromzero/connected_subsets.hpp"

#include <bit>
#include <stdexcept>

namespace chromzero {
namespace {

struct Grower {
  const std::vector<VertexSet>& nbr;
  int target;
  const std::function<void(VertexSet)>& visit;

  void grow(VertexSet chosen, VertexSet frontier, VertexSet excluded) const {
    if (std::popcount(chosen) == target) {
      visit(chosen);
      return;
    }
    while (frontier) {
      const int w = std::countr_zero(frontier);
      const VertexSet bit = VertexSet{1} << w;
      frontier &= ~bit;
      // include w; the remaining frontier vertices stay available on this branch
      const VertexSet with = chosen | bit;
      grow(with, (frontier | nbr[static_cast<std::size_t>(w)]) & ~with & ~excluded, excluded);
      // every later set on this level excludes w
      excluded |= bit;
    }
  }
};

std::vector<VertexSet> masks(const Graph& g) {
  if (g.num_vertices() > kMaxMaskVertices) throw std::invalid_argument("connected-subset enumeration needs at most 64 vertices");
  std::vector<VertexSet> nbr(static_cast<std::size_t>(g.num_vertices()));
  for (Vertex v = 0; v < g.num_vertices(); ++v) nbr[static_cast<std::size_t>(v)] = g.neighbor_mask(v);
  return nbr;
}

}  // namespace

void for_each_connected_subset(const Graph& g, Vertex root, int size,
                               const std::function<void(VertexSet)>& visit) {
  if (root < 0 || root >= g.num_vertices()) throw std::invalid_argument("root out of range");
  if (size < 1) throw std::invalid_argument("subset size must be >= 1");
  if (size > g.num_vertices()) return;
  const auto nbr = masks(g);
  const VertexSet start = VertexSet{1} << root;
  Grower{nbr, size, visit}.grow(start, nbr[static_cast<std::size_t>(root)], start);
}

std::vector<VertexSet> enumerate_connected_subsets(const Graph& g, Vertex root, int size) {
  std::vector<VertexSet> out;
  for_each_connected_subset(g, root, size, [&out](VertexSet s) { out.push_back(s); });
  return out;
}

std::vector<VertexSet> all_connected_subsets(const Graph& g, int size) {
  std::vector<VertexSet> out;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    const VertexSet below = (VertexSet{1} << v) - 1;
    for_each_connected_subset(g, v, size, [&](VertexSet s) {
      if ((s & below) == 0) out.push_back(s);
    });
  }
  return out;
}

bool induces_connected(const Graph& g, VertexSet set) {
  if (set == 0) return false;
  const auto nbr = masks(g);
  VertexSet reached = set & (~set + 1);
  VertexSet frontier = reached;
  while (frontier) {
    const int v = std::countr_zero(frontier);
    frontier &= frontier - 1;
    const VertexSet fresh = nbr[static_cast<std::size_t>(v)] & set & ~reached;
    reached |= fresh;
    frontier |= fresh;
  }
  return reached == set;
}

}  // namespace chromzero
