#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include "chromzero/polynomial.hpp"

namespace chromzero {

/// All complex roots of a polynomial, repeated by multiplicity.
struct RootSet {
  std::vector<std::complex<double>> roots;
  /// |P(r)| / max|coefficient| per root, evaluated in extended precision.
  std::vector<double> residuals;
  double max_modulus = 0.0;
};

class RootFindingError : public std::runtime_error {
 public:
  RootFindingError(const std::string& what, std::vector<std::complex<double>> best, std::vector<double> residuals)
      : std::runtime_error(what), best_(std::move(best)), residuals_(std::move(residuals)) {}

  const std::vector<std::complex<double>>& best_iterate() const noexcept { return best_; }
  const std::vector<double>& residuals() const noexcept { return residuals_; }

 private:
  std::vector<std::complex<double>> best_;
  std::vector<double> residuals_;
};

/// Roots of p via exact square-free decomposition followed by Aberth–Ehrlich
/// iteration on each factor: first in double precision from a perturbed circle
/// at the Cauchy root bound, then polished with 50-digit arithmetic. Non-real
/// roots are paired and symmetrized as conjugates.
///
/// Throws std::invalid_argument for degree < 1 and RootFindingError when any
/// residual stays at or above `tol`.
RootSet polynomial_roots(const IntPolynomial& p, double tol = 1e-10);

/// Square-free decomposition p = c * prod_i f_i^i over the rationals; returns
/// (f_i as primitive integer polynomials, i) for every non-constant f_i.
std::vector<std::pair<IntPolynomial, int>> square_free_decomposition(const IntPolynomial& p);

}  // namespace chromzero
