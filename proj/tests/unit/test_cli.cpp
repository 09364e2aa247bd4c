#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "chromzero/cli.hpp"

using namespace chromzero;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "chromzero");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& haystack, const std::string& needle) { return haystack.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("table output") {
  const Run r = run({"table1", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "delta,sokal,cstar_delta,cstar_complete,exact\n"));
  CHECK(contains(r.out, "2,13.23,10.71,9.90,2\n"));
  CHECK(contains(r.out, "4,29.08,24.44,21.58,4\n"));
  CHECK(contains(r.out, "any,7.96Δ,6.91Δ,5.83Δ,Δ\n"));

  const auto j = nlohmann::json::parse(run({"table1", "--format", "json"}).out);
  CHECK(j["rows"].size() == 4);
  CHECK(j["rows"][3]["sokal"].get<double>() == doctest::Approx(44.98));
}

TEST_CASE("bounds by degree and by graph") {
  const auto d3 = nlohmann::json::parse(run({"bounds", "--delta", "3"}).out);
  CHECK(d3["rounded"]["sokal"].get<double>() == doctest::Approx(21.14));
  CHECK(d3["rounded"]["cstar_delta"].get<double>() == doctest::Approx(17.56));

  const Run k4 = run({"bounds", "--family", "complete", "--n", "4"});
  CHECK(k4.code == 0);
  const auto j = nlohmann::json::parse(k4.out);
  CHECK(j["c_star_graph"].get<double>() == doctest::Approx(15.746).epsilon(1e-4));
  CHECK(j["profile"]["t"] == nlohmann::json::array({"3", "0", "0"}));

  const Run none = run({"bounds"});
  CHECK(none.code != 0);
  CHECK(contains(none.err, "usage"));
}

TEST_CASE("verify") {
  const Run petersen = run({"verify", "--family", "petersen", "--format", "text"});
  CHECK(petersen.code == 0);
  CHECK(contains(petersen.out, "PASS zero_free"));

  const Run k4 = run({"verify", "--family", "complete", "--n", "4"});
  CHECK(k4.code == 0);
  const auto j = nlohmann::json::parse(k4.out);
  CHECK(j["passed"].get<bool>());
  CHECK(j["checks"][0]["detail"][0]["s_value"] == "-6");
  CHECK(j["checks"][0]["detail"][0]["penrose_count"] == "6");

  const Run missing = run({"verify", "--graph", "/nonexistent/graph.txt"});
  CHECK(missing.code == 1);
  CHECK(contains(missing.err, "cannot open"));

  const Run both = run({"verify", "--graph", "x", "--family", "petersen"});
  CHECK(both.code == 2);
}

TEST_CASE("verify from a file") {
  const std::string path = "cli_test_graph.txt";
  {
    std::ofstream f(path);
    f << "# 5-cycle\n5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n";
  }
  const Run r = run({"verify", "--graph", path, "--q", "12", "--format", "text"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "PASS fp_condition"));
  std::remove(path.c_str());
}

TEST_CASE("series") {
  CHECK(contains(run({"series", "--delta", "3", "--order", "5", "--format", "text"}).out, "1,3,9,28,90\n"));
  CHECK(contains(run({"series", "--delta", "2", "--order", "4", "--format", "text"}).out, "1,2,3,4\n"));
  const auto j = nlohmann::json::parse(run({"series", "--family", "complete", "--n", "4", "--order", "5", "--b", "2"}).out);
  CHECK(j["z"] == nlohmann::json::array({"1", "3"}));
  CHECK(j["z_tilde"] == nlohmann::json::array({"1", "2"}));
  CHECK(j["t"] == nlohmann::json::array({"1", "3", "6", "12", "24"}));
  CHECK(j["x_star"].get<double>() == doctest::Approx(0.2));
  CHECK(j["u0"].is_null());
  CHECK(run({"series"}).code == 2);
}

TEST_CASE("format selection") {
  CHECK(run({"table1", "--format", "yaml"}).code != 0);
  setenv("CHROMZERO_FORMAT", "csv", 1);
  CHECK(contains(run({"table1"}).out, "any,"));
  setenv("CHROMZERO_FORMAT", "xml", 1);
  CHECK(run({"table1"}).code == 2);
  unsetenv("CHROMZERO_FORMAT");
  CHECK(run({"bounds", "--family", "hypercube", "--n", "3"}).code == 2);
  CHECK(run({}).code != 0);
}
