#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include "chevalley/error.hpp"
#include "chevalley/rational.hpp"

namespace chevalley {

// Recursive-descent parser for scalar expressions:
//   expr   := [+|-] term {(+|-) term}
//   term   := factor {(*|/) factor}
//   factor := base [^ [-] integer]
//   base   := integer | T | sqrt( [-] integer ) | ( expr )
// Every string printed by a field's format() is accepted by this grammar.
template <class Field>
class ScalarParser {
 public:
  using Element = typename Field::Element;

  ScalarParser(const Field& field, std::string_view text) : field_(field), text_(text) {}

  Element parse() {
    Element value = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return value;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorKind::ParseError,
                "cannot parse scalar '" + std::string(text_) + "' at offset " +
                    std::to_string(pos_) + ": " + why);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Integer integer() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  Element expression() {
    bool negate = false;
    if (accept('-')) {
      negate = true;
    } else {
      accept('+');
    }
    Element value = term();
    if (negate) value = -value;
    for (;;) {
      if (accept('+')) {
        value += term();
      } else if (accept('-')) {
        value -= term();
      } else {
        return value;
      }
    }
  }

  Element term() {
    Element value = factor();
    for (;;) {
      if (accept('*')) {
        value *= factor();
      } else if (accept('/')) {
        Element divisor = factor();
        if (divisor.is_zero()) fail("division by zero");
        value /= divisor;
      } else {
        return value;
      }
    }
  }

  Element factor() {
    Element value = base();
    if (accept('^')) {
      const bool negative = accept('-');
      Integer e = integer();
      if (!e.fits_slong_p()) fail("exponent too large");
      long exponent = e.get_si();
      if (negative) {
        if (value.is_zero()) fail("zero to a negative power");
        exponent = -exponent;
      }
      value = value.pow(exponent);
    }
    return value;
  }

  Element base() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Element value = expression();
      if (!accept(')')) fail("expected ')'");
      return value;
    }
    if (c == 'T') {
      ++pos_;
      return field_.variable();
    }
    if (text_.substr(pos_, 4) == "sqrt") {
      pos_ += 4;
      if (!accept('(')) fail("expected '(' after sqrt");
      const bool negative = accept('-');
      Integer d = integer();
      if (!accept(')')) fail("expected ')'");
      if (!d.fits_slong_p()) fail("radicand too large");
      return field_.sqrt_of(negative ? -d.get_si() : d.get_si());
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return field_.from_rational(Rational(integer()));
    fail(std::string("unexpected character '") + c + "'");
  }

  const Field& field_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace chevalley
