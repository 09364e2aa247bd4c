#pragma once

#include <complex>
#include <initializer_list>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace chromzero {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Exact polynomial with arbitrary-precision integer coefficients, stored in
/// ascending powers. Trailing zeros are always trimmed, so the zero polynomial
/// has no coefficients and degree -1.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coefficients);
  IntPolynomial(std::initializer_list<long long> coefficients);

  static IntPolynomial constant(const BigInt& c);
  /// x^k
  static IntPolynomial monomial(int k);
  /// (x + shift)^power
  static IntPolynomial binomial_power(long long shift, int power);

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Zero for k outside 0..degree().
  BigInt coefficient(int k) const;
  const std::vector<BigInt>& coefficients() const noexcept { return coeffs_; }
  BigInt max_abs_coefficient() const;

  BigInt evaluate(const BigInt& x) const;
  Rational evaluate(const Rational& x) const;
  double evaluate(double x) const;
  std::complex<double> evaluate(std::complex<double> x) const;

  IntPolynomial derivative() const;
  /// Drops every term of degree above max_degree.
  IntPolynomial truncated(int max_degree) const;

  IntPolynomial& operator+=(const IntPolynomial& rhs);
  IntPolynomial& operator-=(const IntPolynomial& rhs);
  IntPolynomial& operator*=(const IntPolynomial& rhs);

  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(IntPolynomial a, const IntPolynomial& b) { return a *= b; }
  friend IntPolynomial operator-(IntPolynomial a);
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  /// Human-readable form, highest power first, e.g. "q^3 - 3*q^2 + 2*q".
  std::string to_string(char variable = 'q') const;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

/// Parses a decimal rational such as "10", "-3/4" or "2.5" exactly.
Rational parse_rational(const std::string& text);

}  // namespace chromzero
