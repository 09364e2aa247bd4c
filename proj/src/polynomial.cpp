#include "chromzero/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace chromzero {

IntPolynomial::IntPolynomial(std::vector<BigInt> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long long> coefficients) {
  coeffs_.reserve(coefficients.size());
  for (long long c : coefficients) coeffs_.emplace_back(c);
  trim();
}

IntPolynomial IntPolynomial::constant(const BigInt& c) { return IntPolynomial(std::vector<BigInt>{c}); }

IntPolynomial IntPolynomial::monomial(int k) {
  if (k < 0) throw std::invalid_argument("negative monomial power");
  std::vector<BigInt> c(static_cast<std::size_t>(k) + 1);
  c.back() = 1;
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::binomial_power(long long shift, int power) {
  if (power < 0) throw std::invalid_argument("negative power");
  std::vector<BigInt> c(static_cast<std::size_t>(power) + 1);
  // coefficient of x^k in (x + s)^p is C(p,k) s^(p-k)
  BigInt binom = 1;
  for (int k = 0; k <= power; ++k) {
    c[static_cast<std::size_t>(k)] = binom * boost::multiprecision::pow(BigInt(shift), static_cast<unsigned>(power - k));
    binom = binom * (power - k) / (k + 1);
  }
  return IntPolynomial(std::move(c));
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntPolynomial::coefficient(int k) const {
  if (k < 0 || k > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(k)];
}

BigInt IntPolynomial::max_abs_coefficient() const {
  BigInt best = 0;
  for (const auto& c : coeffs_) best = std::max(best, BigInt(abs(c)));
  return best;
}

BigInt IntPolynomial::evaluate(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Rational IntPolynomial::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + Rational(*it);
  return acc;
}

double IntPolynomial::evaluate(double x) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->convert_to<double>();
  return acc;
}

std::complex<double> IntPolynomial::evaluate(std::complex<double> x) const {
  std::complex<double> acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->convert_to<double>();
  return acc;
}

IntPolynomial IntPolynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<BigInt> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * static_cast<long long>(k);
  return IntPolynomial(std::move(d));
}

IntPolynomial IntPolynomial::truncated(int max_degree) const {
  if (max_degree < 0) return {};
  if (max_degree >= degree()) return *this;
  return IntPolynomial(std::vector<BigInt>(coeffs_.begin(), coeffs_.begin() + max_degree + 1));
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& rhs) {
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<BigInt> out(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

IntPolynomial operator-(IntPolynomial a) {
  for (auto& c : a.coeffs_) c = -c;
  return a;
}

std::string IntPolynomial::to_string(char variable) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const BigInt& c = coeffs_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    const BigInt mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0 || mag != 1) {
      out << mag;
      if (k > 0) out << "*";
    }
    if (k >= 1) out << variable;
    if (k >= 2) out << "^" << k;
  }
  return out.str();
}

Rational parse_rational(const std::string& text) {
  try {
    const auto slash = text.find('/');
    if (slash != std::string::npos) {
      return Rational(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
    }
    const auto dot = text.find('.');
    if (dot == std::string::npos) return Rational(BigInt(text));
    const std::string whole = text.substr(0, dot);
    const std::string frac = text.substr(dot + 1);
    if (frac.find_first_not_of("0123456789") != std::string::npos) throw std::invalid_argument(text);
    const bool negative = !whole.empty() && whole.front() == '-';
    const BigInt int_part = (whole.empty() || whole == "-" || whole == "+") ? BigInt(0) : BigInt(whole);
    const BigInt scale = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(frac.size()));
    const BigInt frac_part = frac.empty() ? BigInt(0) : BigInt(frac);
    BigInt numerator = abs(int_part) * scale + frac_part;
    if (negative) numerator = -numerator;
    return Rational(numerator, scale);
  } catch (const std::exception&) {
    throw std::invalid_argument("not a decimal or fraction: '" + text + "'");
  }
}

}  // namespace chromzero
