#pragma once

#include <array>
#include <string>

#include "chevalley/quadratic.hpp"
#include "chevalley/rational.hpp"
#include "chevalley/rational_function.hpp"

namespace chevalley {

/// A field automorphism of finite order.  Supported kinds:
///   identity     any field
///   conjugation  sqrt(d) -> -sqrt(d) on Q(sqrt(d))
///   mobius       T -> (aT+b)/(cT+d) on Q(T), only when the map has finite order
class FieldAutomorphism {
 public:
  enum class Kind { identity, conjugation, mobius };

  static FieldAutomorphism identity() { return FieldAutomorphism(Kind::identity); }
  static FieldAutomorphism conjugation() { return FieldAutomorphism(Kind::conjugation); }
  /// Throws InfiniteOrderSigma for a singular or infinite-order matrix.
  static FieldAutomorphism mobius(const Rational& a, const Rational& b, const Rational& c,
                                  const Rational& d);

  Kind kind() const { return kind_; }
  bool is_identity() const { return kind_ == Kind::identity; }
  const std::array<Rational, 4>& matrix() const { return matrix_; }
  int order() const { return order_; }

  FieldAutomorphism inverse() const;
  FieldAutomorphism power(int exponent) const;
  std::string to_string() const;

  friend bool operator==(const FieldAutomorphism&, const FieldAutomorphism&) = default;

 private:
  explicit FieldAutomorphism(Kind kind);

  Kind kind_ = Kind::identity;
  // Normalized projectively: first nonzero entry equals 1.
  std::array<Rational, 4> matrix_{Rational(1), Rational(0), Rational(0), Rational(1)};
  int order_ = 1;
};

/// outer ∘ inner.  Mixing conjugation with a Möbius map is a FieldMismatch.
FieldAutomorphism compose(const FieldAutomorphism& outer, const FieldAutomorphism& inner);

Rational apply_field_automorphism(const FieldAutomorphism& delta, const Rational& x);
QuadraticScalar apply_field_automorphism(const FieldAutomorphism& delta, const QuadraticScalar& x);
RationalFunction apply_field_automorphism(const FieldAutomorphism& delta, const RationalFunction& x);

}  // namespace chevalley
