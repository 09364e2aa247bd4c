#include "chromzero/graph_io.hpp"

#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "chromzero/errors.hpp"

namespace chromzero {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> tokens(std::string_view line) {
  std::istringstream ss{std::string(line)};
  std::vector<std::string> out;
  for (std::string tok; ss >> tok;) out.push_back(tok);
  return out;
}

long long to_integer(const std::string& tok, std::size_t line) {
  std::size_t used = 0;
  long long value = 0;
  try {
    value = std::stoll(tok, &used);
  } catch (const std::exception&) {
    throw ParseError(line, "expected an integer, got '" + tok + "'");
  }
  if (used != tok.size()) throw ParseError(line, "expected an integer, got '" + tok + "'");
  return value;
}

Edge checked_edge(long long u, long long v, long long n, long long offset, std::size_t line) {
  for (long long x : {u, v}) {
    if (x - offset < 0 || x - offset >= n) {
      throw ParseError(line, "vertex index " + std::to_string(x) + " out of range");
    }
  }
  if (u == v) throw ParseError(line, "self-loop at vertex " + std::to_string(u));
  return Edge{static_cast<Vertex>(u - offset), static_cast<Vertex>(v - offset)};
}

Graph parse_edge_list(std::istream& in) {
  std::string raw;
  std::size_t line = 0;
  long long n = -1;
  long long m = -1;
  std::vector<Edge> edges;
  std::size_t seen = 0;
  while (std::getline(in, raw)) {
    ++line;
    const auto text = trim(raw);
    if (text.empty() || text.front() == '#') continue;
    const auto tok = tokens(text);
    if (n < 0) {
      if (tok.size() != 2) throw ParseError(line, "malformed header, expected 'n m'");
      n = to_integer(tok[0], line);
      m = to_integer(tok[1], line);
      if (n < 0 || m < 0) throw ParseError(line, "malformed header, negative count");
      continue;
    }
    if (tok.size() != 2) throw ParseError(line, "malformed edge line, expected 'u v'");
    if (static_cast<long long>(seen) == m) throw ParseError(line, "more edge lines than the declared " + std::to_string(m));
    edges.push_back(checked_edge(to_integer(tok[0], line), to_integer(tok[1], line), n, 0, line));
    ++seen;
  }
  if (n < 0) throw ParseError(line, "missing header");
  if (static_cast<long long>(seen) != m) {
    throw ParseError(line, "expected " + std::to_string(m) + " edge lines, found " + std::to_string(seen));
  }
  return Graph(static_cast<int>(n), edges);
}

Graph parse_dimacs(std::istream& in) {
  std::string raw;
  std::size_t line = 0;
  long long n = -1;
  std::vector<Edge> edges;
  while (std::getline(in, raw)) {
    ++line;
    const auto text = trim(raw);
    if (text.empty() || text.front() == 'c') continue;
    const auto tok = tokens(text);
    if (tok[0] == "p") {
      if (n >= 0) throw ParseError(line, "duplicate problem line");
      if (tok.size() != 4 || (tok[1] != "edge" && tok[1] != "col")) {
        throw ParseError(line, "malformed header, expected 'p edge n m'");
      }
      n = to_integer(tok[2], line);
      if (n < 0 || to_integer(tok[3], line) < 0) throw ParseError(line, "malformed header, negative count");
    } else if (tok[0] == "e") {
      if (n < 0) throw ParseError(line, "edge line before the problem line");
      if (tok.size() != 3) throw ParseError(line, "malformed edge line, expected 'e u v'");
      edges.push_back(checked_edge(to_integer(tok[1], line), to_integer(tok[2], line), n, 1, line));
    } else {
      throw ParseError(line, "unknown line type '" + tok[0] + "'");
    }
  }
  if (n < 0) throw ParseError(line, "missing problem line");
  return Graph(static_cast<int>(n), edges);
}

}  // namespace

Graph parse_graph(std::istream& in, GraphFormat format) {
  return format == GraphFormat::dimacs ? parse_dimacs(in) : parse_edge_list(in);
}

Graph parse_graph(std::string_view text, GraphFormat format) {
  std::istringstream in{std::string(text)};
  return parse_graph(in, format);
}

GraphFormat detect_format(std::string_view text) {
  std::istringstream in{std::string(text)};
  for (std::string raw; std::getline(in, raw);) {
    const auto t = trim(raw);
    if (t.empty() || t.front() == '#') continue;
    return (t.front() == 'p' || t.front() == 'c') ? GraphFormat::dimacs : GraphFormat::edge_list;
  }
  return GraphFormat::edge_list;
}

Graph read_graph_file(const std::filesystem::path& path) {
  std::ifstream file(path);
  if (!file) throw std::runtime_error("cannot open graph file '" + path.string() + "'");
  std::stringstream buffer;
  buffer << file.rdbuf();
  const std::string text = buffer.str();
  return parse_graph(text, detect_format(text));
}

}  // namespace chromzero
