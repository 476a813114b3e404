#pragma once

#include <string>
#include <utility>
#include <vector>

#include "chevalley/rational.hpp"

namespace chevalley {

/// Dense univariate polynomial over Q in the indeterminate T.
/// Coefficients are stored lowest degree first with no trailing zeros.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(const Rational& constant);  // NOLINT
  explicit Polynomial(std::vector<Rational> coefficients);

  static Polynomial variable();
  static Polynomial monomial(const Rational& coefficient, int degree);

  const std::vector<Rational>& coefficients() const { return coefficients_; }
  int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
  bool is_zero() const { return coefficients_.empty(); }
  bool is_constant() const { return coefficients_.size() <= 1; }
  bool is_one() const { return coefficients_.size() == 1 && coefficients_[0].is_one(); }
  Rational coefficient(int k) const;
  const Rational& leading() const { return coefficients_.back(); }

  Rational evaluate(const Rational& x) const;
  Polynomial monic() const;
  Polynomial pow(int exponent) const;

  std::string to_string() const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& scalar);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(const Polynomial& a);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void trim();
  std::vector<Rational> coefficients_;
};

/// Euclidean division; divisor must be nonzero.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& dividend, const Polynomial& divisor);

/// Monic greatest common divisor (zero if both inputs are zero).
Polynomial gcd(Polynomial a, Polynomial b);

}  // namespace chevalley
