#include "chromzero/polymer.hpp"

#include <bit>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "chromzero/connected_subsets.hpp"
#include "chromzero/errors.hpp"
#include "chromzero/neighborhood.hpp"
#include "chromzero/penrose.hpp"
#include "chromzero/tree_series.hpp"

namespace chromzero {
namespace {

std::int64_t induced_signed_sum(const Graph& g, VertexSet set) {
  return signed_connected_sum(g.induced(set));
}

}  // namespace

Monomer::Monomer(const Graph& g, VertexSet vertices) : vertices_(vertices) {
  if (std::popcount(vertices) < 2) throw std::invalid_argument("a monomer needs at least two vertices");
  if (g.num_vertices() < kMaxMaskVertices && (vertices >> g.num_vertices()) != 0) {
    throw std::invalid_argument("monomer vertex out of range");
  }
  if (!induces_connected(g, vertices)) throw std::invalid_argument("monomer does not induce a connected subgraph");
}

int Monomer::size() const noexcept { return std::popcount(vertices_); }

Activity activity(const Graph& g, const Monomer& m, std::complex<double> q) {
  if (q == 0.0) throw std::invalid_argument("activity undefined at q = 0");
  Activity out;
  out.s_value = induced_signed_sum(g, m.vertices());
  out.power = m.size() - 1;
  out.value = static_cast<double>(out.s_value) / std::pow(q, out.power);
  return out;
}

Rational hardcore_partition(const Graph& g, const Rational& q, int max_vertices) {
  if (q == 0) throw std::invalid_argument("partition function undefined at q = 0");
  const int n = g.num_vertices();
  if (n > max_vertices) {
    throw ResourceError("hard-core partition: " + std::to_string(n) + " vertices exceeds the cap of " +
                        std::to_string(max_vertices));
  }
  const std::size_t full = std::size_t{1} << n;

  // Activity of every connected set of size >= 2, zero elsewhere.
  std::vector<Rational> z(full, 0);
  std::vector<Rational> q_power(static_cast<std::size_t>(n) + 1, 1);
  for (std::size_t k = 1; k < q_power.size(); ++k) q_power[k] = q_power[k - 1] * q;
  for (int size = 2; size <= n; ++size) {
    for (VertexSet set : all_connected_subsets(g, size)) {
      z[set] = Rational(induced_signed_sum(g, set)) / q_power[static_cast<std::size_t>(size - 1)];
    }
  }

  // xi[mask]: lowest vertex v of mask is either uncovered or lies in exactly
  // one monomer γ ⊆ mask.
  std::vector<Rational> xi(full, 0);
  xi[0] = 1;
  for (std::size_t mask = 1; mask < full; ++mask) {
    const std::size_t low = mask & (~mask + 1);
    const std::size_t rest = mask ^ low;
    Rational acc = xi[rest];
    for (std::size_t sub = rest; sub != 0; sub = (sub - 1) & rest) {
      const std::size_t gamma = sub | low;
      if (z[gamma] != 0) acc += z[gamma] * xi[mask ^ gamma];
    }
    xi[mask] = acc;
  }
  return xi[full - 1];
}

BigInt cq_weight(const Graph& g, int n) {
  if (n < 2) throw std::invalid_argument("monomer size must be at least 2");
  if (n > g.num_vertices()) return 0;
  std::vector<BigInt> per_vertex(static_cast<std::size_t>(g.num_vertices()), 0);
  for (VertexSet set : all_connected_subsets(g, n)) {
    const std::int64_t s = induced_signed_sum(g, set);
    const BigInt magnitude = s < 0 ? -s : s;
    for (Vertex v : mask_to_vertices(set)) per_vertex[static_cast<std::size_t>(v)] += magnitude;
  }
  BigInt best = 0;
  for (const auto& w : per_vertex) best = std::max(best, w);
  return best;
}

double cq_norm(const Graph& g, int n, double q) {
  if (!(q > 0.0)) throw std::invalid_argument("q must be positive");
  return cq_weight(g, n).convert_to<double>() / std::pow(q, n - 1);
}

CnBoundCheck verify_cn_bound(const Graph& g, int n, double q) {
  if (!(q > 0.0)) throw std::invalid_argument("q must be positive");
  CnBoundCheck out;
  out.n = n;
  out.lhs_scaled = cq_weight(g, n);
  if (g.max_degree() > 0) {
    const auto profile = neighborhood_profile(g);
    out.rhs_scaled = solve_tree_series(profile.z_tilde(), profile.z(), n).t.coefficient(n);
  } else {
    out.rhs_scaled = 0;
  }
  const double scale = std::pow(q, n - 1);
  out.lhs = out.lhs_scaled.convert_to<double>() / scale;
  out.rhs = out.rhs_scaled.convert_to<double>() / scale;
  out.holds = out.lhs_scaled <= out.rhs_scaled;
  return out;
}

FpCertificate check_fp_condition(const Graph& g, double q, double a, int N) {
  if (!(q > 0.0)) throw std::invalid_argument("q must be positive");
  if (!(a > 0.0)) throw std::invalid_argument("a must be positive");
  if (N < 2) throw std::invalid_argument("truncation order must be at least 2");

  FpCertificate cert;
  const int delta = g.max_degree();
  cert.threshold = std::expm1(a);
  cert.ratio = std::exp(1.0 + a) * delta / q;
  for (int n = 2; n <= N; ++n) {
    const double term = n > g.num_vertices() ? 0.0 : std::exp(a * n) * cq_norm(g, n, q);
    cert.terms.push_back(term);
    cert.head += term;
  }

  constexpr double inf = std::numeric_limits<double>::infinity();
  if (cert.head > cert.threshold) {
    cert.status = FpStatus::violated;
    cert.tail = inf;
    return cert;
  }
  if (q <= std::numbers::e * delta) {
    cert.status = FpStatus::inconclusive;
    cert.tail = inf;
    return cert;
  }
  if (N >= g.num_vertices()) {
    cert.tail = 0.0;
  } else if (cert.ratio < 1.0) {
    // sum_{n>N} e^(an) e^(n-1) (Δ/q)^(n-1) = e^a r^N / (1 - r)
    cert.tail = std::exp(a) * std::pow(cert.ratio, N) / (1.0 - cert.ratio);
  } else {
    cert.status = FpStatus::inconclusive;
    cert.tail = inf;
    return cert;
  }
  cert.status = cert.head + cert.tail <= cert.threshold ? FpStatus::satisfied : FpStatus::inconclusive;
  return cert;
}

const char* fp_status_name(FpStatus status) {
  switch (status) {
    case FpStatus::satisfied:
      return "satisfied";
    case FpStatus::violated:
      return "violated";
    case FpStatus::inconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

}  // namespace chromzero
