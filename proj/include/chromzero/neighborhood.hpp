#pragma once

#include <vector>

#include "chromzero/graph.hpp"
#include "chromzero/polynomial.hpp"

namespace chromzero {

/// Independent-subset counts around the worst vertex of a graph.
///
/// t[k-1] is the largest number of independent k-subsets found in a single
/// neighborhood Γ(v0), over all v0 with degree >= k. t_tilde[k-1] is the same
/// count taken in Γ(v0) minus one neighbor, maximized over v0 with degree >= k+1
/// and over the removed neighbor. Empty maxima are 0.
struct NeighborhoodProfile {
  int delta = 0;
  std::vector<BigInt> t;        ///< size delta
  std::vector<BigInt> t_tilde;  ///< size delta - 1

  /// Z(u) = 1 + sum_k t_k u^k
  IntPolynomial z() const;
  /// Z~(u) = 1 + sum_k t~_k u^k
  IntPolynomial z_tilde() const;

  friend bool operator==(const NeighborhoodProfile&, const NeighborhoodProfile&) = default;
};

/// Throws std::invalid_argument for edgeless graphs ("profile undefined for
/// Δ=0") and when Δ exceeds the enumeration limit of 30.
NeighborhoodProfile neighborhood_profile(const Graph& g);

/// Profile with the binomial upper bounds, i.e. that of a triangle-free vertex
/// of degree delta: Z = (1+u)^delta, Z~ = (1+u)^(delta-1).
NeighborhoodProfile binomial_profile(int delta);

}  // namespace chromzero
