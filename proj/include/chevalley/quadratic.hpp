#pragma once

#include <string>

#include "chevalley/rational.hpp"

namespace chevalley {

/// a + b*sqrt(d) in Q(sqrt(d)); d is square-free and not 0 or 1.
/// Mixing values with different d is a FieldMismatch.
class QuadraticScalar {
 public:
  QuadraticScalar() = default;
  QuadraticScalar(Rational a, Rational b, long d);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  long d() const { return d_; }

  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  bool is_one() const { return a_.is_one() && b_.is_zero(); }
  bool is_rational() const { return b_.is_zero(); }

  QuadraticScalar conjugate() const { return {a_, -b_, d_}; }
  Rational norm() const { return a_ * a_ - Rational(d_) * b_ * b_; }
  QuadraticScalar inverse() const;
  QuadraticScalar pow(long exponent) const;
  std::string to_string() const;

  QuadraticScalar& operator+=(const QuadraticScalar& other);
  QuadraticScalar& operator-=(const QuadraticScalar& other);
  QuadraticScalar& operator*=(const QuadraticScalar& other);
  QuadraticScalar& operator/=(const QuadraticScalar& other);

  friend QuadraticScalar operator+(QuadraticScalar x, const QuadraticScalar& y) { return x += y; }
  friend QuadraticScalar operator-(QuadraticScalar x, const QuadraticScalar& y) { return x -= y; }
  friend QuadraticScalar operator*(QuadraticScalar x, const QuadraticScalar& y) { return x *= y; }
  friend QuadraticScalar operator/(QuadraticScalar x, const QuadraticScalar& y) { return x /= y; }
  friend QuadraticScalar operator-(const QuadraticScalar& x) { return {-x.a_, -x.b_, x.d_}; }
  friend bool operator==(const QuadraticScalar& x, const QuadraticScalar& y) {
    return x.d_ == y.d_ && x.a_ == y.a_ && x.b_ == y.b_;
  }

 private:
  void check_same_field(const QuadraticScalar& other) const;

  Rational a_;
  Rational b_;
  long d_ = 2;
};

bool is_square_free(long d);

}  // namespace chevalley
