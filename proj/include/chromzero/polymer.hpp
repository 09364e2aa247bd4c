#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "chromzero/graph.hpp"
#include "chromzero/polynomial.hpp"

namespace chromzero {

/// Vertex set of size >= 2 that induces a connected subgraph.
class Monomer {
 public:
  /// Throws std::invalid_argument when the set is too small or not connected in g.
  Monomer(const Graph& g, VertexSet vertices);

  VertexSet vertices() const noexcept { return vertices_; }
  int size() const noexcept;

 private:
  VertexSet vertices_;
};

/// z = S / q^power with S the signed connected sum of the induced subgraph.
struct Activity {
  std::int64_t s_value = 0;
  int power = 0;
  std::complex<double> value;
};

/// Throws std::invalid_argument for q = 0.
Activity activity(const Graph& g, const Monomer& m, std::complex<double> q);

/// Hard-core partition function: sum over families of pairwise disjoint
/// monomers of the product of their activities, exact over the rationals.
/// Satisfies q^|V| Ξ(q) = P(q). Throws std::invalid_argument for q = 0 and
/// ResourceError above max_vertices.
Rational hardcore_partition(const Graph& g, const Rational& q, int max_vertices = 8);

/// max over x of sum over connected γ ∋ x with |γ| = n of |S_γ|, i.e.
/// C_n^q · q^(n-1). Zero when n exceeds the vertex count.
BigInt cq_weight(const Graph& g, int n);

/// C_n^q. Throws std::invalid_argument for n < 2 or q <= 0.
double cq_norm(const Graph& g, int n, double q);

struct CnBoundCheck {
  int n = 0;
  BigInt lhs_scaled;  ///< C_n^q · q^(n-1)
  BigInt rhs_scaled;  ///< t̄_n from the neighborhood profile
  double lhs = 0.0;
  double rhs = 0.0;
  bool holds = false;
};

/// C_n^q <= q^-(n-1) t̄_n. The comparison is made on the scaled integers, so
/// it does not depend on q.
CnBoundCheck verify_cn_bound(const Graph& g, int n, double q);

enum class FpStatus { satisfied, violated, inconclusive };

struct FpCertificate {
  FpStatus status = FpStatus::inconclusive;
  double head = 0.0;       ///< sum_{n=2}^{N} e^(an) C_n^q
  double tail = 0.0;       ///< bound on the rest; infinity when not certified
  double threshold = 0.0;  ///< e^a - 1
  double ratio = 0.0;      ///< e^(1+a) Δ / q
  std::vector<double> terms;  ///< e^(an) C_n^q for n = 2..N
};

/// Checks sum_{n>=2} e^(an) C_n^q <= e^a - 1. Terms up to N come from
/// enumeration. Beyond |V| every C_n^q vanishes, so the tail is exactly 0
/// when N >= |V|; otherwise it is bounded by a geometric series with ratio
/// e^(1+a) Δ / q, using C_n^q <= n^(n-1)/n! (Δ/q)^(n-1) and n^(n-1)/n! <= e^(n-1).
/// A head above the threshold is violated; q <= eΔ or ratio >= 1 without a
/// zero tail is inconclusive. Throws std::invalid_argument for q <= 0, a <= 0
/// or N < 2.
FpCertificate check_fp_condition(const Graph& g, double q, double a, int N);

const char* fp_status_name(FpStatus status);

}  // namespace chromzero
