#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

namespace chromzero {

enum class OutputFormat { json, csv, text };

struct RunConfig {
  std::string command;
  std::optional<std::string> graph_file;
  std::optional<std::string> family;
  int n = 0;
  int cols = 0;
  int degree = 3;  ///< random-regular only
  std::optional<int> delta;
  std::optional<int> order;
  std::optional<double> q;
  std::optional<double> a;
  std::optional<double> b;
  double tol = 1e-10;
  OutputFormat format = OutputFormat::json;
  std::uint64_t seed = 1;
  int max_vertices = 18;
};

/// Entry point shared by the executable and the tests. Exit status: 0 when
/// every requested check passes, 1 on a failed check or computation error,
/// 2 on a usage error. The default output format comes from CHROMZERO_FORMAT.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace chromzero
