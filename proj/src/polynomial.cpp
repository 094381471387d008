#include "ribbon/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ribbon {

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

IntPolynomial::IntPolynomial(std::initializer_list<long long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long long c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

IntPolynomial IntPolynomial::constant(BigInt c) { return IntPolynomial(std::vector<BigInt>{std::move(c)}); }

IntPolynomial IntPolynomial::monomial(BigInt c, std::size_t power) {
  std::vector<BigInt> coeffs(power + 1);
  coeffs[power] = std::move(c);
  return IntPolynomial(std::move(coeffs));
}

void IntPolynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntPolynomial::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }

BigInt IntPolynomial::coefficient_sum() const {
  BigInt sum = 0;
  for (const auto& c : coeffs_) sum += c;
  return sum;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  normalize();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  normalize();
  return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& rhs) { return *this = *this * rhs; }

IntPolynomial& IntPolynomial::operator*=(const BigInt& c) {
  for (auto& x : coeffs_) x *= c;
  normalize();
  return *this;
}

IntPolynomial IntPolynomial::operator-() const {
  IntPolynomial out = *this;
  for (auto& x : out.coeffs_) x = -x;
  return out;
}

IntPolynomial IntPolynomial::shifted(std::size_t n) const {
  if (is_zero()) return {};
  std::vector<BigInt> out(n);
  out.insert(out.end(), coeffs_.begin(), coeffs_.end());
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::squared_variable() const {
  if (is_zero()) return {};
  std::vector<BigInt> out(2 * coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[2 * i] = coeffs_[i];
  return IntPolynomial(std::move(out));
}

std::string IntPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const BigInt& c = coeffs_[i];
    if (c == 0) continue;
    const BigInt magnitude = c < 0 ? BigInt(-c) : c;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    out += magnitude.str();
    if (i >= 1) out += "*z";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

std::string IntPolynomial::to_csv_row() const {
  std::string out = std::to_string(degree());
  for (const auto& c : coeffs_) out += "," + c.str();
  return out;
}

IntPolynomial pow(const IntPolynomial& p, unsigned exponent) {
  IntPolynomial result = IntPolynomial::constant(1);
  IntPolynomial base = p;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

Rational eval_derivative(const IntPolynomial& p, const Rational& x, unsigned order) {
  if (order > 2) throw std::invalid_argument("eval_derivative: order must be 0, 1 or 2");
  // Horner on the derivative's coefficients: i(i-1)...(i-order+1) * c_i.
  Rational acc = 0;
  const auto& c = p.coeffs();
  for (std::size_t i = c.size(); i-- > order;) {
    BigInt falling = c[i];
    for (unsigned j = 0; j < order; ++j) falling *= BigInt(i - j);
    acc = acc * x + Rational(falling);
  }
  return acc;
}

std::optional<IntPolynomial> exact_divide(const IntPolynomial& dividend, const IntPolynomial& divisor) {
  if (divisor.is_zero()) throw std::invalid_argument("exact_divide: division by the zero polynomial");
  if (dividend.is_zero()) return IntPolynomial{};
  if (dividend.degree() < divisor.degree()) return std::nullopt;
  std::vector<Rational> rem(dividend.coeffs().begin(), dividend.coeffs().end());
  const auto& den = divisor.coeffs();
  const std::size_t dd = den.size() - 1;
  const Rational lead(den.back());
  std::vector<Rational> quot(rem.size() - dd);
  for (std::size_t i = quot.size(); i-- > 0;) {
    const Rational q = rem[i + dd] / lead;
    quot[i] = q;
    if (q == 0) continue;
    for (std::size_t j = 0; j <= dd; ++j) rem[i + j] -= q * Rational(den[j]);
  }
  for (std::size_t i = 0; i < dd; ++i)
    if (rem[i] != 0) return std::nullopt;
  std::vector<BigInt> out;
  out.reserve(quot.size());
  for (const auto& q : quot) {
    if (denominator(q) != 1) return std::nullopt;
    out.push_back(numerator(q));
  }
  return IntPolynomial(std::move(out));
}

std::string Spectrum::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(exponents[i]);
  }
  out += "}";
  out += interpolating ? " interpolating" : " NOT interpolating";
  return out;
}

Spectrum spectrum(const IntPolynomial& p) {
  Spectrum s;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i)
    if (p.coeffs()[i] != 0) s.exponents.push_back(i);
  s.interpolating = !s.exponents.empty() && s.exponents.back() - s.exponents.front() + 1 == s.exponents.size();
  return s;
}

std::string to_string(const Rational& q) {
  const BigInt num = numerator(q);
  const BigInt den = denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace ribbon
