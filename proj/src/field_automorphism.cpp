#include "chevalley/field_automorphism.hpp"

#include "chevalley/error.hpp"

namespace chevalley {
namespace {

using Mat2 = std::array<Rational, 4>;

Mat2 multiply(const Mat2& x, const Mat2& y) {
  return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3],
          x[2] * y[0] + x[3] * y[2], x[2] * y[1] + x[3] * y[3]};
}

bool is_scalar(const Mat2& m) { return m[1].is_zero() && m[2].is_zero() && m[0] == m[3]; }

Mat2 normalize(Mat2 m) {
  for (const auto& entry : m) {
    if (!entry.is_zero()) {
      const Rational scale = entry.inverse();
      for (auto& e : m) e *= scale;
      break;
    }
  }
  return m;
}

// Finite-order elements of PGL2(Q) have order 1, 2, 3, 4 or 6.
constexpr int kMaxMobiusOrder = 12;

}  // namespace

FieldAutomorphism::FieldAutomorphism(Kind kind) : kind_(kind), order_(kind == Kind::conjugation ? 2 : 1) {}

FieldAutomorphism FieldAutomorphism::mobius(const Rational& a, const Rational& b, const Rational& c,
                                            const Rational& d) {
  const Mat2 m{a, b, c, d};
  if ((a * d - b * c).is_zero()) {
    throw Error(ErrorKind::InfiniteOrderSigma, "singular Mobius matrix");
  }
  Mat2 power = m;
  for (int k = 1; k <= kMaxMobiusOrder; ++k) {
    if (is_scalar(power)) {
      if (k == 1) return identity();
      FieldAutomorphism result(Kind::mobius);
      result.matrix_ = normalize(m);
      result.order_ = k;
      return result;
    }
    power = multiply(power, m);
  }
  throw Error(ErrorKind::InfiniteOrderSigma, "Mobius map T -> (" + a.to_string() + "*T+" + b.to_string() +
                                                 ")/(" + c.to_string() + "*T+" + d.to_string() +
                                                 ") has infinite order");
}

FieldAutomorphism FieldAutomorphism::inverse() const {
  if (kind_ != Kind::mobius) return *this;
  const auto& m = matrix_;
  return mobius(m[3], -m[1], -m[2], m[0]);
}

FieldAutomorphism FieldAutomorphism::power(int exponent) const {
  exponent %= order_;
  if (exponent < 0) exponent += order_;
  FieldAutomorphism result = identity();
  for (int k = 0; k < exponent; ++k) result = compose(*this, result);
  return result;
}

std::string FieldAutomorphism::to_string() const {
  switch (kind_) {
    case Kind::identity: return "identity";
    case Kind::conjugation: return "conjugation";
    case Kind::mobius:
      return "mobius(" + matrix_[0].to_string() + "," + matrix_[1].to_string() + "," +
             matrix_[2].to_string() + "," + matrix_[3].to_string() + ")";
  }
  return "identity";
}

FieldAutomorphism compose(const FieldAutomorphism& outer, const FieldAutomorphism& inner) {
  using Kind = FieldAutomorphism::Kind;
  if (outer.is_identity()) return inner;
  if (inner.is_identity()) return outer;
  if (outer.kind() == Kind::conjugation && inner.kind() == Kind::conjugation) {
    return FieldAutomorphism::identity();
  }
  if (outer.kind() == Kind::mobius && inner.kind() == Kind::mobius) {
    // (outer ∘ inner)(f)(T) = f(inner·(outer·T)), i.e. the matrix inner·outer.
    const Mat2 m = multiply(inner.matrix(), outer.matrix());
    return FieldAutomorphism::mobius(m[0], m[1], m[2], m[3]);
  }
  throw Error(ErrorKind::FieldMismatch, "cannot compose " + outer.to_string() + " with " + inner.to_string());
}

Rational apply_field_automorphism(const FieldAutomorphism& delta, const Rational& x) {
  if (!delta.is_identity()) throw Error(ErrorKind::FieldMismatch, delta.to_string() + " does not act on Q");
  return x;
}

QuadraticScalar apply_field_automorphism(const FieldAutomorphism& delta, const QuadraticScalar& x) {
  switch (delta.kind()) {
    case FieldAutomorphism::Kind::identity: return x;
    case FieldAutomorphism::Kind::conjugation: return x.conjugate();
    case FieldAutomorphism::Kind::mobius: break;
  }
  throw Error(ErrorKind::FieldMismatch, delta.to_string() + " does not act on Q(sqrt(d))");
}

RationalFunction apply_field_automorphism(const FieldAutomorphism& delta, const RationalFunction& x) {
  if (delta.is_identity()) return x;
  if (delta.kind() != FieldAutomorphism::Kind::mobius) {
    throw Error(ErrorKind::FieldMismatch, delta.to_string() + " does not act on Q(T)");
  }
  const auto& m = delta.matrix();
  const Polynomial top(std::vector<Rational>{m[1], m[0]});     // aT + b
  const Polynomial bottom(std::vector<Rational>{m[3], m[2]});  // cT + d
  const int n = std::max(x.numerator().degree(), x.denominator().degree());
  auto substitute = [&](const Polynomial& p) {
    Polynomial out;
    for (int k = 0; k <= p.degree(); ++k) {
      const Rational& c = p.coefficients()[static_cast<std::size_t>(k)];
      if (c.is_zero()) continue;
      Polynomial term = top.pow(k) * bottom.pow(n - k);
      term *= c;
      out += term;
    }
    return out;
  };
  return RationalFunction(substitute(x.numerator()), substitute(x.denominator()));
}

}  // namespace chevalley
