#include "chevalley/polynomial.hpp"

#include <algorithm>

#include "chevalley/error.hpp"

namespace chevalley {

Polynomial::Polynomial(const Rational& constant) {
  if (!constant.is_zero()) coefficients_.push_back(constant);
}

Polynomial::Polynomial(std::vector<Rational> coefficients) : coefficients_(std::move(coefficients)) {
  trim();
}

Polynomial Polynomial::variable() { return monomial(Rational(1), 1); }

Polynomial Polynomial::monomial(const Rational& coefficient, int degree) {
  Polynomial p;
  if (coefficient.is_zero()) return p;
  p.coefficients_.assign(static_cast<std::size_t>(degree) + 1, Rational(0));
  p.coefficients_.back() = coefficient;
  return p;
}

void Polynomial::trim() {
  while (!coefficients_.empty() && coefficients_.back().is_zero()) coefficients_.pop_back();
}

Rational Polynomial::coefficient(int k) const {
  if (k < 0 || k > degree()) return Rational(0);
  return coefficients_[static_cast<std::size_t>(k)];
}

Rational Polynomial::evaluate(const Rational& x) const {
  Rational value(0);
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
    value *= x;
    value += *it;
  }
  return value;
}

Polynomial Polynomial::monic() const {
  if (is_zero() || leading().is_one()) return *this;
  Polynomial p = *this;
  p *= leading().inverse();
  return p;
}

Polynomial Polynomial::pow(int exponent) const {
  Polynomial result(Rational(1));
  Polynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1) result = result * base;
    exponent >>= 1;
    if (exponent > 0) base = base * base;
  }
  return result;
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = coefficients_[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    const bool negative = c.sign() < 0;
    const Rational magnitude = negative ? -c : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? "-" : "+";
    }
    if (k == 0) {
      out += magnitude.to_string();
      continue;
    }
    if (!magnitude.is_one()) out += magnitude.to_string() + "*";
    out += "T";
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (other.coefficients_.size() > coefficients_.size()) {
    coefficients_.resize(other.coefficients_.size(), Rational(0));
  }
  for (std::size_t k = 0; k < other.coefficients_.size(); ++k) coefficients_[k] += other.coefficients_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  if (other.coefficients_.size() > coefficients_.size()) {
    coefficients_.resize(other.coefficients_.size(), Rational(0));
  }
  for (std::size_t k = 0; k < other.coefficients_.size(); ++k) coefficients_[k] -= other.coefficients_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& scalar) {
  if (scalar.is_zero()) {
    coefficients_.clear();
    return *this;
  }
  for (auto& c : coefficients_) c *= scalar;
  return *this;
}

Polynomial operator-(const Polynomial& a) {
  Polynomial p = a;
  for (auto& c : p.coefficients_) c = -c;
  return p;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial();
  std::vector<Rational> out(a.coefficients_.size() + b.coefficients_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coefficients_.size(); ++i) {
    if (a.coefficients_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coefficients_.size(); ++j) {
      out[i + j] += a.coefficients_[i] * b.coefficients_[j];
    }
  }
  return Polynomial(std::move(out));
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& dividend, const Polynomial& divisor) {
  if (divisor.is_zero()) throw Error(ErrorKind::NonInvertibleScalar, "polynomial division by zero");
  if (dividend.degree() < divisor.degree()) return {Polynomial(), dividend};
  std::vector<Rational> remainder = dividend.coefficients();
  const int dd = divisor.degree();
  std::vector<Rational> quotient(static_cast<std::size_t>(dividend.degree() - dd) + 1, Rational(0));
  const Rational lead_inverse = divisor.leading().inverse();
  for (int k = dividend.degree() - dd; k >= 0; --k) {
    const Rational q = remainder[static_cast<std::size_t>(k + dd)] * lead_inverse;
    quotient[static_cast<std::size_t>(k)] = q;
    if (q.is_zero()) continue;
    for (int j = 0; j <= dd; ++j) {
      remainder[static_cast<std::size_t>(k + j)] -= q * divisor.coefficients()[static_cast<std::size_t>(j)];
    }
  }
  remainder.resize(static_cast<std::size_t>(dd));
  return {Polynomial(std::move(quotient)), Polynomial(std::move(remainder))};
}

Polynomial gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

}  // namespace chevalley
