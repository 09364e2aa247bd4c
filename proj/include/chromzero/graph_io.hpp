#pragma once

#include <filesystem>
#include <iosfwd>
#include <string_view>

#include "chromzero/graph.hpp"

namespace chromzero {

enum class GraphFormat {
  edge_list,  ///< "n m" header, then m lines "u v" with 0-based labels; '#' starts a comment line
  dimacs,     ///< "p edge n m" header, then "e u v" lines with 1-based labels; 'c' starts a comment line
};

/// Throws ParseError (with the 1-based line number) on malformed input.
Graph parse_graph(std::istream& in, GraphFormat format);
Graph parse_graph(std::string_view text, GraphFormat format);

/// Picks DIMACS when the first meaningful line starts with 'p' or 'c', edge-list otherwise.
GraphFormat detect_format(std::string_view text);

/// Reads and parses a file, detecting its format. Throws std::runtime_error when
/// the file cannot be opened.
Graph read_graph_file(const std::filesystem::path& path);

}  // namespace chromzero
