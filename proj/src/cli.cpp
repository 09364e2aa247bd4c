#include "chromzero/cli.hpp"

#include <cmath>
#include <cstdlib>
#include <iomanip>
#include <map>
#include <sstream>
#include <stdexcept>
#include <vector>

#include <CLI11.hpp>

#include "chromzero/bounds.hpp"
#include "chromzero/chromatic.hpp"
#include "chromzero/corpus.hpp"
#include "chromzero/errors.hpp"
#include "chromzero/generators.hpp"
#include "chromzero/graph_io.hpp"
#include "chromzero/parallel.hpp"
#include "chromzero/penrose.hpp"
#include "chromzero/polymer.hpp"
#include "chromzero/report_json.hpp"
#include "chromzero/tree_series.hpp"

namespace chromzero {
namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::optional<OutputFormat> parse_format(const std::string& name) {
  if (name == "json") return OutputFormat::json;
  if (name == "csv") return OutputFormat::csv;
  if (name == "text") return OutputFormat::text;
  return std::nullopt;
}

std::string num(double x) {
  if (!std::isfinite(x)) return "inf";
  std::ostringstream s;
  s << std::setprecision(10) << x;
  return s.str();
}

std::string fixed2(double x) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(2) << round_half_up(x, 2);
  return s.str();
}

json finite_or_null(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

std::string join(const std::vector<BigInt>& values, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += sep;
    out += values[i].str();
  }
  return out;
}

struct LoadedGraph {
  std::string id;
  Graph graph;
};

bool has_graph_source(const RunConfig& cfg) { return cfg.graph_file || cfg.family; }

LoadedGraph load_graph(const RunConfig& cfg) {
  if (cfg.graph_file && cfg.family) throw UsageError("give either --graph or --family, not both");
  if (cfg.graph_file) return {*cfg.graph_file, read_graph_file(*cfg.graph_file)};
  if (!cfg.family) throw UsageError("a graph is required: use --graph FILE or --family NAME");
  const auto family = parse_family(*cfg.family);
  if (!family) throw UsageError("unknown family '" + *cfg.family + "'");
  GeneratorParams params{cfg.n, cfg.cols, cfg.degree, cfg.seed};
  std::string id = family_name(*family);
  if (*family != GraphFamily::petersen) id += "-" + std::to_string(cfg.n);
  if (*family == GraphFamily::grid) id += "x" + std::to_string(cfg.cols == 0 ? cfg.n : cfg.cols);
  if (*family == GraphFamily::random_regular) id += "-" + std::to_string(cfg.degree) + "-s" + std::to_string(cfg.seed);
  return {id, generate_graph(*family, params)};
}

int cmd_bounds(const RunConfig& cfg, std::ostream& out) {
  if (has_graph_source(cfg)) {
    const auto [id, g] = load_graph(cfg);
    const BoundReport report = cstar_graph_series(g, cfg.order.value_or(64), id);
    switch (cfg.format) {
      case OutputFormat::json:
        out << to_json(report).dump(2) << '\n';
        break;
      case OutputFormat::csv:
        out << "graph_id,delta,c_sokal,c_star_delta,c_star_graph,c_star_graph_series\n"
            << report.graph_id << ',' << report.delta << ',' << num(report.c_sokal) << ',' << num(report.c_star_delta)
            << ',' << (report.c_star_graph ? num(*report.c_star_graph) : "") << ','
            << (report.c_star_graph_series ? num(*report.c_star_graph_series) : "") << '\n';
        break;
      case OutputFormat::text:
        out << "graph: " << report.graph_id << "\nmax degree: " << report.delta << "\nsokal: " << num(report.c_sokal)
            << "\ncstar_delta: " << num(report.c_star_delta) << '\n';
        if (report.c_star_graph) out << "cstar_graph: " << num(*report.c_star_graph) << '\n';
        if (report.c_star_graph_series) out << "cstar_graph_series: " << num(*report.c_star_graph_series) << '\n';
        break;
    }
    return 0;
  }
  if (!cfg.delta) throw UsageError("bounds needs --delta, --graph or --family");
  const int d = *cfg.delta;
  const auto sokal = sokal_bound(d);
  const auto cstar = cstar_delta(d);
  const double complete = complete_graph_bound(d);
  switch (cfg.format) {
    case OutputFormat::json:
      out << json{{"delta", d},
                  {"sokal", to_json(sokal)},
                  {"cstar_delta", to_json(cstar)},
                  {"cstar_complete", complete},
                  {"rounded",
                   {{"sokal", round_half_up(sokal.value, 2)},
                    {"cstar_delta", round_half_up(cstar.value, 2)},
                    {"cstar_complete", round_half_up(complete, 2)}}}}
                 .dump(2)
          << '\n';
      break;
    case OutputFormat::csv:
      out << "delta,sokal,cstar_delta,cstar_complete\n"
          << d << ',' << num(sokal.value) << ',' << num(cstar.value) << ',' << num(complete) << '\n';
      break;
    case OutputFormat::text:
      out << "delta: " << d << "\nsokal: " << num(sokal.value) << "\ncstar_delta: " << num(cstar.value)
          << "\ncstar_complete: " << num(complete) << '\n';
      break;
  }
  return 0;
}

int cmd_table1(const RunConfig& cfg, std::ostream& out) {
  const Constants c = constants();
  const double complete_limit = 1.0 / (3.0 - 2.0 * std::sqrt(2.0));
  struct Row {
    int delta;
    double sokal, cstar, complete;
  };
  std::vector<Row> rows;
  for (int d : {2, 3, 4, 6}) rows.push_back({d, sokal_bound(d).value, cstar_delta(d).value, complete_graph_bound(d)});

  if (cfg.format == OutputFormat::json) {
    json body = json::array();
    for (const Row& r : rows) {
      body.push_back({{"delta", r.delta},
                      {"sokal", round_half_up(r.sokal, 2)},
                      {"cstar_delta", round_half_up(r.cstar, 2)},
                      {"cstar_complete", round_half_up(r.complete, 2)},
                      {"exact", r.delta}});
    }
    out << json{{"rows", body},
                {"asymptotic",
                 {{"sokal", round_half_up(c.k.value, 2)},
                  {"cstar_delta", round_half_up(c.k_star.value, 2)},
                  {"cstar_complete", round_half_up(complete_limit, 2)},
                  {"exact", 1}}}}
               .dump(2)
        << '\n';
    return 0;
  }
  const char* sep = cfg.format == OutputFormat::csv ? "," : "  ";
  out << "delta" << sep << "sokal" << sep << "cstar_delta" << sep << "cstar_complete" << sep << "exact\n";
  for (const Row& r : rows) {
    out << r.delta << sep << fixed2(r.sokal) << sep << fixed2(r.cstar) << sep << fixed2(r.complete) << sep << r.delta
        << '\n';
  }
  out << "any" << sep << fixed2(c.k.value) << "Δ" << sep << fixed2(c.k_star.value) << "Δ" << sep
      << fixed2(complete_limit) << "Δ" << sep << "Δ\n";
  return 0;
}

struct Check {
  std::string name;
  bool passed = true;
  bool skipped = false;
  std::string summary;
  json detail;
};

Check check_penrose(const Graph& g) {
  Check c{"penrose_identity", true, false, "", json::array()};
  for (const auto& component : g.components()) {
    const Graph h = g.induced(component);
    try {
      const PenroseReport r = penrose_report(h);
      const bool ok = r.identity_holds(h.num_vertices()) && r.chain_holds();
      c.passed = c.passed && ok;
      c.detail.push_back(to_json(r));
      if (!c.summary.empty()) c.summary += "; ";
      c.summary += "S=" + std::to_string(r.s_value) + " |P|=" + std::to_string(r.penrose_count) +
                   " |Pw|=" + std::to_string(r.weak_penrose_count) + " |T|=" + std::to_string(r.tree_count);
    } catch (const ResourceError& e) {
      c.skipped = true;
      c.summary = e.what();
    }
  }
  return c;
}

Check check_partition(const Graph& g, int cap) {
  Check c{"partition_identity", true, false, "", json::array()};
  try {
    const IntPolynomial p = chromatic_polynomial(g);
    for (int q : {2, 3, 5, 10}) {
      const Rational xi = hardcore_partition(g, Rational(q), cap);
      Rational scaled = xi;
      for (int i = 0; i < g.num_vertices(); ++i) scaled *= q;
      const Rational expected = p.evaluate(Rational(q));
      const bool ok = scaled == expected;
      c.passed = c.passed && ok;
      std::ostringstream xs;
      xs << xi;
      c.detail.push_back({{"q", q}, {"xi", xs.str()}, {"chromatic", numerator(expected).str()}, {"holds", ok}});
    }
    c.summary = c.passed ? "q^|V| Xi(q) = P(q) at q = 2, 3, 5, 10" : "q^|V| Xi(q) differs from P(q)";
  } catch (const ResourceError& e) {
    c.skipped = true;
    c.summary = e.what();
  }
  return c;
}

Check check_activity_bound(const Graph& g, int max_n, double q) {
  Check c{"activity_bound", true, false, "", json::array()};
  for (int n = 2; n <= std::min(max_n, g.num_vertices()); ++n) {
    const CnBoundCheck r = verify_cn_bound(g, n, q);
    c.passed = c.passed && r.holds;
    c.detail.push_back(to_json(r));
    if (!c.summary.empty()) c.summary += ' ';
    c.summary += "n=" + std::to_string(n) + ":" + r.lhs_scaled.str() + "<=" + r.rhs_scaled.str();
  }
  return c;
}

Check check_zero_free(const Graph& g, const std::string& id, const RunConfig& cfg) {
  const BoundReport r = verify_zero_free(g, id, cfg.max_vertices, cfg.tol);
  Check c{"zero_free", r.zero_free_verified, false, "", to_json(r)};
  c.summary = "max |root| " + num(*r.max_root_modulus) + " vs radius " + num(r.zero_free_radius());
  return c;
}

Check check_fp(const Graph& g, const RunConfig& cfg) {
  double a = 0.0;
  if (cfg.a) {
    a = *cfg.a;
  } else {
    if (g.max_degree() < 2) throw UsageError("--a is required when the maximum degree is below 2");
    a = fp_parameter(neighborhood_profile(g));
  }
  const FpCertificate cert = check_fp_condition(g, *cfg.q, a, cfg.order.value_or(g.num_vertices()));
  Check c{"fp_condition", cert.status == FpStatus::satisfied, false, "", to_json(cert)};
  c.detail["a"] = a;
  c.summary = std::string(fp_status_name(cert.status)) + " head " + num(cert.head) + " tail " + num(cert.tail) +
              " threshold " + num(cert.threshold);
  return c;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto [id, g] = load_graph(cfg);
  if (g.num_vertices() == 0) throw std::invalid_argument("graph has no vertices");
  std::vector<Check> checks;
  checks.push_back(check_penrose(g));
  checks.push_back(check_partition(g, std::min(cfg.max_vertices, 12)));
  checks.push_back(check_activity_bound(g, cfg.order.value_or(5), cfg.q.value_or(1.0)));
  checks.push_back(check_zero_free(g, id, cfg));
  if (cfg.q) checks.push_back(check_fp(g, cfg));

  bool all = true;
  for (const Check& c : checks) all = all && c.passed;

  switch (cfg.format) {
    case OutputFormat::json: {
      json list = json::array();
      for (const Check& c : checks) {
        list.push_back(
            {{"name", c.name}, {"passed", c.passed}, {"skipped", c.skipped}, {"summary", c.summary}, {"detail", c.detail}});
      }
      out << json{{"graph_id", id}, {"graph", to_json(g)}, {"checks", list}, {"passed", all}}.dump(2) << '\n';
      break;
    }
    case OutputFormat::csv:
      out << "check,status,summary\n";
      for (const Check& c : checks)
        out << c.name << ',' << (c.skipped ? "SKIP" : c.passed ? "PASS" : "FAIL") << ",\"" << c.summary << "\"\n";
      break;
    case OutputFormat::text:
      for (const Check& c : checks)
        out << (c.skipped ? "SKIP " : c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.summary << '\n';
      break;
  }
  for (const Check& c : checks)
    if (!c.passed) err << "check failed: " << c.name << '\n';
  return all ? 0 : 1;
}

int cmd_series(const RunConfig& cfg, std::ostream& out) {
  const int order = cfg.order.value_or(10);
  if (order < 1) throw UsageError("--order must be at least 1");
  std::string source;
  IntPolynomial z;
  IntPolynomial zt;
  if (has_graph_source(cfg)) {
    const auto [id, g] = load_graph(cfg);
    const auto profile = neighborhood_profile(g);
    source = id;
    z = profile.z();
    zt = profile.z_tilde();
  } else if (cfg.delta) {
    if (*cfg.delta < 1) throw UsageError("--delta must be at least 1");
    source = "delta-" + std::to_string(*cfg.delta);
    z = IntPolynomial::binomial_power(1, *cfg.delta);
    zt = IntPolynomial::binomial_power(1, *cfg.delta - 1);
  } else {
    throw UsageError("series needs --delta, --graph or --family");
  }
  const TreeSeries s = solve_tree_series(zt, z, order);
  const SeriesRadius radius = series_radius(zt);
  std::optional<double> x_star;
  if (cfg.b) x_star = sup_x_threshold(*cfg.b, z, zt);

  switch (cfg.format) {
    case OutputFormat::json: {
      json body = {{"source", source},   {"order", order},
                   {"z", to_json(z)},    {"z_tilde", to_json(zt)},
                   {"t", to_json(s.t)},  {"u", to_json(s.u)},
                   {"radius", finite_or_null(radius.r)}, {"u0", finite_or_null(radius.u0)}};
      if (cfg.b) {
        body["b"] = *cfg.b;
        body["x_star"] = *x_star;
      }
      out << body.dump(2) << '\n';
      break;
    }
    case OutputFormat::csv:
      out << "n,t,u\n";
      for (int n = 1; n <= order; ++n) out << n << ',' << s.t.coefficient(n) << ',' << s.u.coefficient(n) << '\n';
      break;
    case OutputFormat::text:
      out << join(s.t.coefficients(), ",") << "\nR: " << num(radius.r) << "\nu0: " << num(radius.u0) << '\n';
      if (x_star) out << "x*: " << num(*x_star) << '\n';
      break;
  }
  return 0;
}

int cmd_corpus(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const int max_n = cfg.n > 0 ? cfg.n : 7;
  if (max_n > 9) throw UsageError("--n must be at most 9 for the corpus");
  std::vector<NamedGraph> items;
  for (int n = 1; n <= max_n; ++n) {
    const auto graphs = connected_graphs(n);
    for (std::size_t i = 0; i < graphs.size(); ++i)
      items.push_back({"connected-" + std::to_string(n) + "-" + std::to_string(i), graphs[i]});
  }
  for (auto& named : named_corpus(12)) items.push_back(std::move(named));

  struct Outcome {
    BoundReport report;
    std::string error;
  };
  const auto outcomes = parallel_map(items, [&cfg](const NamedGraph& item) {
    Outcome o;
    o.report.graph_id = item.id;
    try {
      o.report = verify_zero_free(item.graph, item.id, cfg.max_vertices, cfg.tol);
    } catch (const std::exception& e) {
      o.error = e.what();
    }
    return o;
  });

  std::size_t verified = 0;
  for (const auto& o : outcomes)
    if (o.error.empty() && o.report.zero_free_verified) ++verified;
  const bool all = verified == outcomes.size();

  switch (cfg.format) {
    case OutputFormat::json: {
      json list = json::array();
      for (const auto& o : outcomes) {
        json entry = to_json(o.report);
        if (!o.error.empty()) entry["error"] = o.error;
        list.push_back(std::move(entry));
      }
      out << json{{"graphs", outcomes.size()}, {"verified", verified}, {"reports", list}}.dump(2) << '\n';
      break;
    }
    case OutputFormat::csv:
    case OutputFormat::text:
      out << "graph_id,delta,radius,max_root_modulus,verified\n";
      for (const auto& o : outcomes) {
        out << o.report.graph_id << ',' << o.report.delta << ',';
        if (o.error.empty()) {
          out << num(o.report.zero_free_radius()) << ',' << num(*o.report.max_root_modulus) << ','
              << (o.report.zero_free_verified ? "yes" : "no") << '\n';
        } else {
          out << ",,error\n";
        }
      }
      break;
  }
  for (const auto& o : outcomes) {
    if (!o.error.empty()) err << o.report.graph_id << ": " << o.error << '\n';
    else if (!o.report.zero_free_verified) err << o.report.graph_id << ": root outside the zero-free disk\n";
  }
  return all ? 0 : 1;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  std::string format_name = "json";
  if (const char* env = std::getenv("CHROMZERO_FORMAT"); env && *env) format_name = env;

  CLI::App app{"Chromatic polynomial zero-free bounds"};
  app.require_subcommand(1);
  auto common = [&](CLI::App* sub) {
    sub->add_option("--graph", cfg.graph_file, "graph file (edge list or DIMACS)");
    sub->add_option("--family", cfg.family, "complete, cycle, path, star, grid, petersen, random-regular");
    sub->add_option("--n", cfg.n, "family size (leaves for star, rows for grid)");
    sub->add_option("--cols", cfg.cols, "grid columns (default: square)");
    sub->add_option("--degree", cfg.degree, "random-regular degree");
    sub->add_option("--delta", cfg.delta, "maximum degree");
    sub->add_option("--order", cfg.order, "series order or largest monomer size");
    sub->add_option("--q", cfg.q, "number of colors");
    sub->add_option("--a", cfg.a, "convergence parameter");
    sub->add_option("--b", cfg.b, "threshold level for x*");
    sub->add_option("--tol", cfg.tol, "root residual tolerance");
    sub->add_option("--format", format_name, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("--seed", cfg.seed, "random-regular seed");
    sub->add_option("--max-vertices", cfg.max_vertices, "vertex cap for chromatic polynomials")
        ->check(CLI::PositiveNumber);
  };
  for (const char* name : {"bounds", "table1", "verify", "series", "corpus"}) {
    static const std::map<std::string, std::string> help = {
        {"bounds", "zero-free radii for a graph or a maximum degree"},
        {"table1", "comparison table of the bounds for small degrees"},
        {"verify", "identity and zero-freeness checks on one graph"},
        {"series", "tree-count coefficients, radius and threshold"},
        {"corpus", "zero-freeness over all small connected graphs and named families"}};
    common(app.add_subcommand(name, help.at(name)));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  const auto format = parse_format(format_name);
  if (!format) {
    err << "error: unknown output format '" << format_name << "'\n";
    return 2;
  }
  cfg.format = *format;
  cfg.command = app.get_subcommands().front()->get_name();

  try {
    if (cfg.command == "bounds") return cmd_bounds(cfg, out);
    if (cfg.command == "table1") return cmd_table1(cfg, out);
    if (cfg.command == "verify") return cmd_verify(cfg, out, err);
    if (cfg.command == "series") return cmd_series(cfg, out);
    return cmd_corpus(cfg, out, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace chromzero
