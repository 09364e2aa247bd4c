#pragma once

#include <vector>

#include "chromzero/polynomial.hpp"

namespace chromzero {

/// Power series a_1 x + a_2 x^2 + ... + a_N x^N with exact integer coefficients.
class TruncatedSeries {
 public:
  TruncatedSeries() = default;
  /// coefficients[0] is a_1.
  explicit TruncatedSeries(std::vector<BigInt> coefficients) : coeffs_(std::move(coefficients)) {}

  int order() const noexcept { return static_cast<int>(coeffs_.size()); }
  /// a_n for 1 <= n <= order(); throws std::out_of_range otherwise.
  const BigInt& coefficient(int n) const { return coeffs_.at(static_cast<std::size_t>(n - 1)); }
  const std::vector<BigInt>& coefficients() const noexcept { return coeffs_; }

  /// sum_{n=1}^{N} a_n x^(n-1), i.e. the partial sum of series(x)/x.
  double partial_sum_over_x(double x) const;

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  std::vector<BigInt> coeffs_;
};

struct TreeSeries {
  TruncatedSeries u;  ///< U = x Z~(U)
  TruncatedSeries t;  ///< T = x Z(U)
};

/// Solves U = x Z~(U) and T = x Z(U) to order N. The coefficient of x^n in
/// x Z~(U) only involves a_1..a_{n-1} of U, so U is filled in one order at a
/// time. Throws std::invalid_argument unless both polynomials have constant
/// term 1 and non-negative coefficients, or when N < 1.
TreeSeries solve_tree_series(const IntPolynomial& z_tilde, const IntPolynomial& z, int N);

/// Rooted subtree counts of the Δ-regular infinite tree: Z = (1+u)^Δ, Z~ = (1+u)^(Δ-1).
TruncatedSeries t_n_delta(int delta, int N);

struct SeriesRadius {
  double r = 0.0;   ///< sup_{u >= 0} u / Z~(u); infinity when Z~ = 1
  double u0 = 0.0;  ///< maximizer; infinity when Z~ has degree <= 1
};

SeriesRadius series_radius(const IntPolynomial& z_tilde);

/// Smallest u >= 0 with Z(u) = b, by bisection. Throws std::invalid_argument
/// when b <= 1 or b >= sup Z.
double inverse_increasing(const IntPolynomial& z, double b);

/// x* = Z^-1(b) / Z~(Z^-1(b)). Same errors as inverse_increasing.
double sup_x_threshold(double b, const IntPolynomial& z, const IntPolynomial& z_tilde);

}  // namespace chromzero
