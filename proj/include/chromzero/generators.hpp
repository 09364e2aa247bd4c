#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "chromzero/graph.hpp"

namespace chromzero {

enum class GraphFamily { complete, cycle, path, star, grid, petersen, random_regular };

struct GeneratorParams {
  int n = 0;     ///< vertex count; leaf count for star; row count for grid
  int cols = 0;  ///< grid only; 0 means square
  int degree = 0;  ///< random-regular only
  std::uint64_t seed = 0;
};

std::optional<GraphFamily> parse_family(std::string_view name);
std::string family_name(GraphFamily family);

/// Throws std::invalid_argument on bad parameters.
Graph generate_graph(GraphFamily family, const GeneratorParams& params);

Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
/// K_{1,leaves}; the centre is vertex 0.
Graph star_graph(int leaves);
Graph grid_graph(int rows, int cols);
Graph petersen_graph();
/// Configuration-model pairing, retried until simple. Same seed, same graph.
Graph random_regular_graph(int n, int degree, std::uint64_t seed);

}  // namespace chromzero
