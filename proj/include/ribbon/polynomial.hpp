#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ribbon/numeric.hpp"

namespace ribbon {

/// Dense univariate polynomial in z with arbitrary-precision integer
/// coefficients; index i holds the coefficient of z^i. Always normalized: no
/// trailing zeros, the zero polynomial has no coefficients.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coeffs);
  IntPolynomial(std::initializer_list<long long> coeffs);

  static IntPolynomial constant(BigInt c);
  static IntPolynomial monomial(BigInt c, std::size_t power);
  /// The polynomial z.
  static IntPolynomial z() { return monomial(1, 1); }

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  /// Zero beyond the degree.
  BigInt coeff(std::size_t i) const;
  const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
  /// Value at z = 1.
  BigInt coefficient_sum() const;

  IntPolynomial& operator+=(const IntPolynomial& rhs);
  IntPolynomial& operator-=(const IntPolynomial& rhs);
  IntPolynomial& operator*=(const IntPolynomial& rhs);
  IntPolynomial& operator*=(const BigInt& c);

  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(IntPolynomial a, const BigInt& c) { return a *= c; }
  friend IntPolynomial operator*(const BigInt& c, IntPolynomial a) { return a *= c; }
  IntPolynomial operator-() const;

  /// Multiply by z^n.
  IntPolynomial shifted(std::size_t n) const;
  /// Substitute z -> z^2.
  IntPolynomial squared_variable() const;

  bool operator==(const IntPolynomial&) const = default;

  /// "2 + 30*z + 4*z^2"; zero terms omitted; "0" for the zero polynomial.
  std::string to_string() const;
  /// "degree,c0,c1,..."
  std::string to_csv_row() const;

 private:
  void normalize();
  std::vector<BigInt> coeffs_;
};

IntPolynomial pow(const IntPolynomial& p, unsigned exponent);

/// Exact p(x), p'(x) or p''(x); order must be 0, 1 or 2.
Rational eval_derivative(const IntPolynomial& p, const Rational& x, unsigned order);

/// Long division over the rationals. Returns the quotient when the remainder is
/// zero and every quotient coefficient is an integer, nullopt otherwise.
std::optional<IntPolynomial> exact_divide(const IntPolynomial& numerator, const IntPolynomial& denominator);

struct Spectrum {
  std::vector<std::size_t> exponents;
  /// Exponents form a contiguous, non-empty integer interval.
  bool interpolating = false;

  /// "{1,3} NOT interpolating" / "{0,1} interpolating"
  std::string to_string() const;
};

Spectrum spectrum(const IntPolynomial& p);

std::string to_string(const Rational& q);

}  // namespace ribbon
