#include "chevalley/quadratic.hpp"

#include <cstdlib>

#include "chevalley/error.hpp"

namespace chevalley {

bool is_square_free(long d) {
  if (d == 0) return false;
  unsigned long m = static_cast<unsigned long>(std::labs(d));
  for (unsigned long p = 2; p * p <= m; ++p) {
    if (m % (p * p) == 0) return false;
  }
  return true;
}

QuadraticScalar::QuadraticScalar(Rational a, Rational b, long d)
    : a_(std::move(a)), b_(std::move(b)), d_(d) {}

void QuadraticScalar::check_same_field(const QuadraticScalar& other) const {
  if (d_ != other.d_) {
    throw Error(ErrorKind::FieldMismatch,
                "Q(sqrt(" + std::to_string(d_) + ")) vs Q(sqrt(" + std::to_string(other.d_) + "))");
  }
}

QuadraticScalar QuadraticScalar::inverse() const {
  const Rational n = norm();
  if (n.is_zero()) throw Error(ErrorKind::NonInvertibleScalar, "inverse of zero in Q(sqrt(d))");
  return {a_ / n, -b_ / n, d_};
}

QuadraticScalar QuadraticScalar::pow(long exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  QuadraticScalar result(Rational(1), Rational(0), d_);
  QuadraticScalar base = *this;
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return result;
}

std::string QuadraticScalar::to_string() const {
  if (b_.is_zero()) return a_.to_string();
  const std::string radical = "sqrt(" + std::to_string(d_) + ")";
  const bool negative = b_.sign() < 0;
  const Rational magnitude = negative ? -b_ : b_;
  std::string out;
  if (!a_.is_zero()) out = a_.to_string() + (negative ? "-" : "+");
  else if (negative) out = "-";
  if (!magnitude.is_one()) out += magnitude.to_string() + "*";
  return out + radical;
}

QuadraticScalar& QuadraticScalar::operator+=(const QuadraticScalar& other) {
  check_same_field(other);
  a_ += other.a_;
  b_ += other.b_;
  return *this;
}

QuadraticScalar& QuadraticScalar::operator-=(const QuadraticScalar& other) {
  check_same_field(other);
  a_ -= other.a_;
  b_ -= other.b_;
  return *this;
}

QuadraticScalar& QuadraticScalar::operator*=(const QuadraticScalar& other) {
  check_same_field(other);
  if (b_.is_zero() && other.b_.is_zero()) {
    a_ *= other.a_;
    return *this;
  }
  Rational a = a_ * other.a_ + Rational(d_) * b_ * other.b_;
  Rational b = a_ * other.b_ + b_ * other.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

QuadraticScalar& QuadraticScalar::operator/=(const QuadraticScalar& other) {
  check_same_field(other);
  return *this *= other.inverse();
}

}  // namespace chevalley
