#pragma once

#include <string>

#include "chevalley/polynomial.hpp"

namespace chevalley {

/// Element of Q(T) kept in canonical form: numerator and denominator coprime,
/// denominator monic.  Equality is therefore syntactic.
class RationalFunction {
 public:
  RationalFunction() : denominator_(Rational(1)) {}
  RationalFunction(const Rational& constant)  // NOLINT
      : numerator_(constant), denominator_(Rational(1)) {}
  RationalFunction(const Polynomial& polynomial)  // NOLINT
      : numerator_(polynomial), denominator_(Rational(1)) {}
  RationalFunction(Polynomial numerator, Polynomial denominator);

  static RationalFunction variable() { return RationalFunction(Polynomial::variable()); }

  const Polynomial& numerator() const { return numerator_; }
  const Polynomial& denominator() const { return denominator_; }

  bool is_zero() const { return numerator_.is_zero(); }
  bool is_one() const { return numerator_.is_one() && denominator_.is_one(); }
  bool is_constant() const { return numerator_.is_constant() && denominator_.is_constant(); }

  RationalFunction inverse() const;
  RationalFunction pow(long exponent) const;
  std::string to_string() const;

  RationalFunction& operator+=(const RationalFunction& other);
  RationalFunction& operator-=(const RationalFunction& other);
  RationalFunction& operator*=(const RationalFunction& other);
  RationalFunction& operator/=(const RationalFunction& other);

  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
  friend RationalFunction operator-(const RationalFunction& a);
  friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

 private:
  struct Canonical {};
  RationalFunction(Polynomial numerator, Polynomial denominator, Canonical)
      : numerator_(std::move(numerator)), denominator_(std::move(denominator)) {}
  void canonicalize();

  Polynomial numerator_;
  Polynomial denominator_;
};

/// Exact value f(a); throws PoleAtPoint when the denominator vanishes at a.
Rational evaluate(const RationalFunction& f, const Rational& a);

/// Increasing inputs 1, 2, 3, ... (skipping poles and value collisions) until
/// n inputs with pairwise-distinct values are found.
std::vector<Rational> distinct_value_inputs(const RationalFunction& f, std::size_t n);

}  // namespace chevalley
