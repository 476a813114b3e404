#include "chevalley/rational_function.hpp"

#include <set>

#include "chevalley/error.hpp"

namespace chevalley {

RationalFunction::RationalFunction(Polynomial numerator, Polynomial denominator)
    : numerator_(std::move(numerator)), denominator_(std::move(denominator)) {
  canonicalize();
}

void RationalFunction::canonicalize() {
  if (denominator_.is_zero()) throw Error(ErrorKind::NonInvertibleScalar, "zero denominator in Q(T)");
  if (numerator_.is_zero()) {
    denominator_ = Polynomial(Rational(1));
    return;
  }
  if (!denominator_.is_constant()) {
    const Polynomial g = gcd(numerator_, denominator_);
    if (!g.is_one()) {
      numerator_ = divmod(numerator_, g).first;
      denominator_ = divmod(denominator_, g).first;
    }
  }
  if (!denominator_.leading().is_one()) {
    const Rational scale = denominator_.leading().inverse();
    numerator_ *= scale;
    denominator_ *= scale;
  }
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw Error(ErrorKind::NonInvertibleScalar, "inverse of zero in Q(T)");
  Polynomial num = denominator_;
  Polynomial den = numerator_;
  const Rational scale = den.leading().inverse();
  num *= scale;
  den *= scale;
  return RationalFunction(std::move(num), std::move(den), Canonical{});
}

RationalFunction RationalFunction::pow(long exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  const int e = static_cast<int>(exponent);
  return RationalFunction(numerator_.pow(e), denominator_.pow(e), Canonical{});
}

std::string RationalFunction::to_string() const {
  if (denominator_.is_one()) return numerator_.to_string();
  return "(" + numerator_.to_string() + ")/(" + denominator_.to_string() + ")";
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& other) {
  if (denominator_ == other.denominator_) {
    numerator_ += other.numerator_;
    if (!denominator_.is_one()) canonicalize();
    else if (numerator_.is_zero()) denominator_ = Polynomial(Rational(1));
    return *this;
  }
  numerator_ = numerator_ * other.denominator_ + other.numerator_ * denominator_;
  denominator_ = denominator_ * other.denominator_;
  canonicalize();
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& other) {
  return *this += -other;
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& other) {
  if (is_zero() || other.is_zero()) {
    *this = RationalFunction();
    return *this;
  }
  if (denominator_.is_one() && other.denominator_.is_one()) {
    numerator_ = numerator_ * other.numerator_;
    return *this;
  }
  // Cross-cancel; monic denominators divided by monic factors stay monic.
  Polynomial a = numerator_;
  Polynomial b = denominator_;
  Polynomial c = other.numerator_;
  Polynomial d = other.denominator_;
  const Polynomial g1 = gcd(a, d);
  if (!g1.is_one()) {
    a = divmod(a, g1).first;
    d = divmod(d, g1).first;
  }
  const Polynomial g2 = gcd(c, b);
  if (!g2.is_one()) {
    c = divmod(c, g2).first;
    b = divmod(b, g2).first;
  }
  numerator_ = a * c;
  denominator_ = b * d;
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& other) {
  return *this *= other.inverse();
}

RationalFunction operator-(const RationalFunction& a) {
  return RationalFunction(-a.numerator_, a.denominator_, RationalFunction::Canonical{});
}

Rational evaluate(const RationalFunction& f, const Rational& a) {
  const Rational den = f.denominator().evaluate(a);
  if (den.is_zero()) throw Error(ErrorKind::PoleAtPoint, "denominator vanishes at " + a.to_string());
  return f.numerator().evaluate(a) / den;
}

std::vector<Rational> distinct_value_inputs(const RationalFunction& f, std::size_t n) {
  if (f.is_constant()) throw Error(ErrorKind::ConstantFunction, f.to_string() + " is constant");
  std::vector<Rational> inputs;
  std::set<Rational> seen;
  // A non-constant function takes each value finitely often, so this terminates.
  for (long x = 1; inputs.size() < n; ++x) {
    const Rational point(x);
    if (f.denominator().evaluate(point).is_zero()) continue;
    if (seen.insert(evaluate(f, point)).second) inputs.push_back(point);
  }
  return inputs;
}

}  // namespace chevalley
