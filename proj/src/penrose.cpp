#include "chromzero/penrose.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

#include "chromzero/errors.hpp"

namespace chromzero {
namespace {

// Connectivity of the spanning subgraph made of the edges flagged in `keep`.
bool connected_with(int n, const std::vector<Edge>& edges, const std::vector<char>& keep) {
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  };
  int parts = n;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (!keep[i]) continue;
    const int a = find(edges[i].u);
    const int b = find(edges[i].v);
    if (a != b) {
      parent[static_cast<std::size_t>(a)] = b;
      --parts;
    }
  }
  return parts <= 1;
}

void require_connected(const Graph& g) {
  if (g.num_vertices() == 0) throw std::invalid_argument("graph has no vertices");
  if (!g.is_connected()) throw std::invalid_argument("graph is not connected");
}

struct TreeWalker {
  std::shared_ptr<const Graph> g;
  Vertex root;
  const std::function<void(const RootedSpanningTree&)>& visit;
  std::vector<char> available;
  std::vector<Edge> chosen;

  void walk(std::size_t index, std::vector<int> fragment) {
    const int n = g->num_vertices();
    if (static_cast<int>(chosen.size()) == n - 1) {
      visit(RootedSpanningTree(g, chosen, root));
      return;
    }
    const auto& edges = g->edges();
    if (index == edges.size()) return;
    const Edge e = edges[index];
    const int fu = fragment[static_cast<std::size_t>(e.u)];
    const int fv = fragment[static_cast<std::size_t>(e.v)];
    if (fu != fv) {
      auto merged = fragment;
      for (int& f : merged)
        if (f == fv) f = fu;
      chosen.push_back(e);
      walk(index + 1, std::move(merged));
      chosen.pop_back();
    }
    available[index] = 0;
    if (connected_with(n, edges, available)) walk(index + 1, std::move(fragment));
    available[index] = 1;
  }
};

}  // namespace

RootedSpanningTree::RootedSpanningTree(std::shared_ptr<const Graph> host, std::vector<Edge> edges, Vertex root)
    : host_(std::move(host)), edges_(std::move(edges)), root_(root) {
  const int n = host_->num_vertices();
  if (root < 0 || root >= n) throw std::invalid_argument("tree root out of range");
  if (static_cast<int>(edges_.size()) != n - 1) throw std::invalid_argument("a spanning tree needs n-1 edges");
  std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(n));
  for (const Edge& e : edges_) {
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n || !host_->adjacent(e.u, e.v)) {
      throw std::invalid_argument("tree edge is not a host edge");
    }
    adj[static_cast<std::size_t>(e.u)].push_back(e.v);
    adj[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  parent_.assign(static_cast<std::size_t>(n), -1);
  depth_.assign(static_cast<std::size_t>(n), -1);
  depth_[static_cast<std::size_t>(root)] = 0;
  std::vector<Vertex> queue{root};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex v = queue[head];
    for (Vertex w : adj[static_cast<std::size_t>(v)]) {
      if (depth_[static_cast<std::size_t>(w)] >= 0) continue;
      depth_[static_cast<std::size_t>(w)] = depth_[static_cast<std::size_t>(v)] + 1;
      parent_[static_cast<std::size_t>(w)] = v;
      queue.push_back(w);
    }
  }
  if (static_cast<int>(queue.size()) != n) throw std::invalid_argument("tree edges do not span the host");
}

void for_each_spanning_tree(std::shared_ptr<const Graph> g, Vertex root,
                            const std::function<void(const RootedSpanningTree&)>& visit) {
  require_connected(*g);
  if (root < 0 || root >= g->num_vertices()) throw std::invalid_argument("tree root out of range");
  std::vector<int> fragment(static_cast<std::size_t>(g->num_vertices()));
  std::iota(fragment.begin(), fragment.end(), 0);
  TreeWalker walker{g, root, visit, std::vector<char>(g->edges().size(), 1), {}};
  walker.walk(0, std::move(fragment));
}

std::vector<RootedSpanningTree> enumerate_spanning_trees(const Graph& g, Vertex root) {
  std::vector<RootedSpanningTree> out;
  for_each_spanning_tree(std::make_shared<const Graph>(g), root,
                         [&out](const RootedSpanningTree& t) { out.push_back(t); });
  return out;
}

TreeClass classify_tree(const RootedSpanningTree& tree) {
  bool penrose = true;
  bool weak = true;
  for (const Edge& e : tree.host().edges()) {
    const int du = tree.depth(e.u);
    const int dv = tree.depth(e.v);
    if (du == dv) {
      penrose = false;
      if (tree.parent(e.u) == tree.parent(e.v)) weak = false;
      continue;
    }
    // orient so that i is one generation below j
    const Vertex i = du > dv ? e.u : e.v;
    const Vertex j = du > dv ? e.v : e.u;
    if (tree.depth(i) - tree.depth(j) == 1 && j > tree.parent(i)) penrose = false;
  }
  if (penrose) return TreeClass::penrose;
  return weak ? TreeClass::weakly_penrose_only : TreeClass::neither;
}

std::int64_t signed_connected_sum(const Graph& g, int max_edges) {
  require_connected(g);
  if (g.num_edges() > max_edges) {
    throw ResourceError("signed connected sum: " + std::to_string(g.num_edges()) + " edges exceeds the cap of " +
                        std::to_string(max_edges));
  }
  const auto& edges = g.edges();
  std::vector<char> keep(edges.size(), 1);
  std::int64_t sum = 0;
  // Every leaf is a connected spanning subgraph: an edge is dropped only if
  // the graph stays connected without it.
  std::function<void(std::size_t, int)> walk = [&](std::size_t index, int kept) {
    if (index == edges.size()) {
      sum += (kept % 2 == 0) ? 1 : -1;
      return;
    }
    walk(index + 1, kept);
    keep[index] = 0;
    if (connected_with(g.num_vertices(), edges, keep)) walk(index + 1, kept - 1);
    keep[index] = 1;
  };
  walk(0, g.num_edges());
  return sum;
}

bool PenroseReport::identity_holds(int num_vertices) const {
  const std::int64_t signed_count = (num_vertices % 2 == 1) ? static_cast<std::int64_t>(penrose_count)
                                                           : -static_cast<std::int64_t>(penrose_count);
  return s_value == signed_count;
}

bool PenroseReport::chain_holds() const {
  return penrose_count <= weak_penrose_count && weak_penrose_count <= tree_count;
}

PenroseReport penrose_report(const Graph& g, Vertex root, int max_edges) {
  PenroseReport report;
  report.root = root;
  report.s_value = signed_connected_sum(g, max_edges);
  for_each_spanning_tree(std::make_shared<const Graph>(g), root, [&report](const RootedSpanningTree& t) {
    ++report.tree_count;
    switch (classify_tree(t)) {
      case TreeClass::penrose:
        ++report.penrose_count;
        ++report.weak_penrose_count;
        break;
      case TreeClass::weakly_penrose_only:
        ++report.weak_penrose_count;
        break;
      case TreeClass::neither:
        break;
    }
  });
  return report;
}

std::vector<PenroseReport> penrose_reports_by_root(const Graph& g, int max_edges) {
  std::vector<PenroseReport> out;
  for (Vertex r = 0; r < g.num_vertices(); ++r) out.push_back(penrose_report(g, r, max_edges));
  return out;
}

}  // namespace chromzero
