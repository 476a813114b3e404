#pragma once

#include <string>
#include <string_view>

#include "chevalley/error.hpp"
#include "chevalley/field_automorphism.hpp"
#include "chevalley/quadratic.hpp"
#include "chevalley/rational.hpp"
#include "chevalley/rational_function.hpp"

namespace chevalley {

// Field descriptors.  Each one knows its element type, how to make constants,
// which automorphism kinds it admits, and how to print and parse elements.
// None of the supported fields is radically closed, so the "f(T)=a always
// solvable" branch of the torus decomposition is never taken.

class RationalField {
 public:
  using Element = Rational;

  Element zero() const { return Rational(0); }
  Element one() const { return Rational(1); }
  Element from_rational(const Rational& x) const { return x; }
  Element variable() const;
  Element sqrt_of(long d) const;

  std::string name() const { return "Q"; }
  bool radically_closed() const { return false; }
  bool admits(const FieldAutomorphism& delta) const { return delta.is_identity(); }
  void check(const FieldAutomorphism& delta) const;

  std::string format(const Element& x) const { return x.to_string(); }
  Element parse(std::string_view text) const;

  friend bool operator==(const RationalField&, const RationalField&) = default;
};

class QuadraticField {
 public:
  using Element = QuadraticScalar;

  /// Throws IncompatibleField unless d is square-free and not 0 or 1.
  explicit QuadraticField(long d);

  long d() const { return d_; }
  Element zero() const { return {Rational(0), Rational(0), d_}; }
  Element one() const { return {Rational(1), Rational(0), d_}; }
  Element from_rational(const Rational& x) const { return {x, Rational(0), d_}; }
  Element variable() const;
  Element sqrt_of(long d) const;

  std::string name() const { return "Q(sqrt(" + std::to_string(d_) + "))"; }
  bool radically_closed() const { return false; }
  bool admits(const FieldAutomorphism& delta) const {
    return delta.kind() != FieldAutomorphism::Kind::mobius;
  }
  void check(const FieldAutomorphism& delta) const;

  std::string format(const Element& x) const { return x.to_string(); }
  Element parse(std::string_view text) const;

  friend bool operator==(const QuadraticField&, const QuadraticField&) = default;

 private:
  long d_;
};

class RationalFunctionField {
 public:
  using Element = RationalFunction;

  Element zero() const { return RationalFunction(); }
  Element one() const { return RationalFunction(Rational(1)); }
  Element from_rational(const Rational& x) const { return RationalFunction(x); }
  Element variable() const { return RationalFunction::variable(); }
  Element sqrt_of(long d) const;

  std::string name() const { return "Q(T)"; }
  bool radically_closed() const { return false; }
  bool admits(const FieldAutomorphism& delta) const {
    return delta.kind() != FieldAutomorphism::Kind::conjugation;
  }
  void check(const FieldAutomorphism& delta) const;

  std::string format(const Element& x) const { return x.to_string(); }
  Element parse(std::string_view text) const;

  friend bool operator==(const RationalFunctionField&, const RationalFunctionField&) = default;
};

template <class Field>
typename Field::Element apply_field_automorphism(const Field& field, const FieldAutomorphism& delta,
                                                 const typename Field::Element& x) {
  field.check(delta);
  return apply_field_automorphism(delta, x);
}

}  // namespace chevalley
