#include "chromzero/corpus.hpp"

#include <map>
#include <stdexcept>

#include "chromzero/canonical.hpp"
#include "chromzero/generators.hpp"

namespace chromzero {
namespace {

std::vector<Graph> extend_by_vertex(const std::vector<Graph>& smaller, int n, bool allow_isolated) {
  std::map<CanonicalForm, Graph> unique;
  const int old_n = n - 1;
  const VertexSet first = allow_isolated ? 0 : 1;
  for (const Graph& g : smaller) {
    for (VertexSet attach = first; attach < (VertexSet{1} << old_n); ++attach) {
      std::vector<Edge> edges = g.edges();
      for (Vertex v : mask_to_vertices(attach)) edges.push_back({v, old_n});
      const Graph bigger(n, edges);
      const auto labeling = canonical_labeling(bigger);
      if (unique.count(labeling.form)) continue;
      std::vector<Vertex> new_label(static_cast<std::size_t>(n));
      for (std::size_t i = 0; i < labeling.order.size(); ++i) new_label[static_cast<std::size_t>(labeling.order[i])] = static_cast<Vertex>(i);
      unique.emplace(labeling.form, bigger.relabeled(new_label));
    }
  }
  std::vector<Graph> out;
  out.reserve(unique.size());
  for (auto& [form, graph] : unique) out.push_back(std::move(graph));
  return out;
}

std::vector<Graph> build(int n, bool connected) {
  if (n < (connected ? 1 : 0) || n > 9) throw std::invalid_argument("graph corpus supports up to 9 vertices");
  std::vector<Graph> level{Graph(connected ? 1 : 0)};
  for (int k = connected ? 2 : 1; k <= n; ++k) level = extend_by_vertex(level, k, !connected);
  return level;
}

}  // namespace

std::vector<Graph> connected_graphs(int n) { return build(n, true); }

std::vector<Graph> all_graphs(int n) { return build(n, false); }

std::vector<NamedGraph> named_corpus(int max_vertices) {
  std::vector<NamedGraph> out;
  auto add = [&](std::string id, Graph g) {
    if (g.num_vertices() <= max_vertices) out.push_back({std::move(id), std::move(g)});
  };
  for (int n = 2; n <= max_vertices; ++n) add("complete-" + std::to_string(n), complete_graph(n));
  for (int n = 3; n <= max_vertices; ++n) add("cycle-" + std::to_string(n), cycle_graph(n));
  for (int n = 2; n <= max_vertices; ++n) add("path-" + std::to_string(n), path_graph(n));
  for (int k = 2; k + 1 <= max_vertices; ++k) add("star-" + std::to_string(k), star_graph(k));
  for (int r = 2; r <= 4; ++r)
    for (int c = r; c <= 6; ++c) add("grid-" + std::to_string(r) + "x" + std::to_string(c), grid_graph(r, c));
  add("petersen", petersen_graph());
  add("random-regular-8-3-s1", random_regular_graph(8, 3, 1));
  add("random-regular-10-3-s2", random_regular_graph(10, 3, 2));
  add("random-regular-12-3-s3", random_regular_graph(12, 3, 3));
  add("random-regular-12-4-s4", random_regular_graph(12, 4, 4));
  return out;
}

}  // namespace chromzero
