#include "chevalley/fields.hpp"

#include "chevalley/expression.hpp"

namespace chevalley {
namespace {

[[noreturn]] void unsupported(const std::string& field, const std::string& what) {
  throw Error(ErrorKind::ParseError, what + " is not an element of " + field);
}

}  // namespace

Rational RationalField::variable() const { unsupported(name(), "T"); }
Rational RationalField::sqrt_of(long d) const { unsupported(name(), "sqrt(" + std::to_string(d) + ")"); }

void RationalField::check(const FieldAutomorphism& delta) const {
  if (!admits(delta)) throw Error(ErrorKind::FieldMismatch, delta.to_string() + " does not act on " + name());
}

Rational RationalField::parse(std::string_view text) const { return ScalarParser(*this, text).parse(); }

QuadraticField::QuadraticField(long d) : d_(d) {
  if (d == 1 || !is_square_free(d)) {
    throw Error(ErrorKind::IncompatibleField, "Q(sqrt(" + std::to_string(d) + ")) needs square-free d != 0, 1");
  }
}

QuadraticScalar QuadraticField::variable() const { unsupported(name(), "T"); }

QuadraticScalar QuadraticField::sqrt_of(long d) const {
  if (d != d_) unsupported(name(), "sqrt(" + std::to_string(d) + ")");
  return {Rational(0), Rational(1), d_};
}

void QuadraticField::check(const FieldAutomorphism& delta) const {
  if (!admits(delta)) throw Error(ErrorKind::FieldMismatch, delta.to_string() + " does not act on " + name());
}

QuadraticScalar QuadraticField::parse(std::string_view text) const { return ScalarParser(*this, text).parse(); }

RationalFunction RationalFunctionField::sqrt_of(long d) const {
  unsupported(name(), "sqrt(" + std::to_string(d) + ")");
}

void RationalFunctionField::check(const FieldAutomorphism& delta) const {
  if (!admits(delta)) throw Error(ErrorKind::FieldMismatch, delta.to_string() + " does not act on " + name());
}

RationalFunction RationalFunctionField::parse(std::string_view text) const {
  return ScalarParser(*this, text).parse();
}

}  // namespace chevalley
