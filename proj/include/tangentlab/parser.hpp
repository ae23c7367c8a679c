// Copyright 2026 The tangentlab Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

/// @file parser.hpp
/// @brief Recursive-descent parser for surd expressions.
///
/// Grammar (whitespace ignored):
///
///     expr := term | "(" expr ")" "/" int
///     term := "[" sum "]" | sum
///     sum  := prod (("+" | "-") prod)*
///     prod := [int "*"] atom | int
///     atom := "sqrt" "(" int ")" | int | "(" sum ")"
///     int  := ["-"] digit+
///
/// Two conveniences extend it: a "-" may prefix "sqrt" or a parenthesised
/// sum ("-sqrt(2)"), and the "/" int after a parenthesised expr is optional
/// ("((1+sqrt(5))/2)"). All sqrt() radicands in one expression must
/// reduce to the same square-free part.

#include "tangentlab/quadratic.hpp"

#include <cctype>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace tangentlab {

class ParseError : public std::runtime_error {
 public:
  enum class Kind { syntax, negative_radicand, radicand_too_large, mixed_fields, division_by_zero };

  ParseError(Kind kind, std::size_t position, const std::string& message)
      : std::runtime_error(message + " at position " + std::to_string(position)),
        kind_(kind),
        position_(position) {}

  Kind kind() const { return kind_; }
  /// Zero-based offset into the original text.
  std::size_t position() const { return position_; }

 private:
  Kind kind_;
  std::size_t position_;
};

namespace detail {

class SurdParser {
 public:
  explicit SurdParser(std::string_view text) : text_(text) {}

  FieldElement parse() {
    const FieldElement value = expr(/*closing=*/'\0');
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return value;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what, ParseError::Kind kind = ParseError::Kind::syntax) const {
    throw ParseError(kind, pos_, what);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) {
      const char got = peek();
      fail(std::string("expected '") + c + "'" + (got ? std::string(", found '") + got + "'" : ", found end of input"));
    }
  }

  bool int_ahead() {
    skip_space();
    std::size_t i = pos_;
    if (i < text_.size() && text_[i] == '-') ++i;
    while (i < text_.size() && std::isspace(static_cast<unsigned char>(text_[i]))) ++i;
    return i < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i]));
  }

  Integer integer() {
    skip_space();
    bool negative = false;
    if (pos_ < text_.size() && text_[pos_] == '-') {
      negative = true;
      ++pos_;
      skip_space();
    }
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    Integer v(std::string(text_.substr(start, pos_ - start)));
    return negative ? Integer(-v) : v;
  }

  // closing is the character that must follow a complete expr: ')' or end ('\0')
  FieldElement expr(char closing) {
    if (peek() == '(') {
      const std::size_t saved = pos_;
      try {
        expect('(');
        FieldElement inner = expr(')');
        expect(')');
        if (!accept('/')) {
          if (peek() != closing) fail("trailing input after parenthesised expression");
          return inner;
        }
        const std::size_t at = (skip_space(), pos_);
        const Integer divisor = integer();
        if (divisor == 0) throw ParseError(ParseError::Kind::division_by_zero, at, "division by zero");
        if (peek() != closing) fail("trailing input after quotient");
        return inner / FieldElement(Rational(divisor));
      } catch (const ParseError& e) {
        if (e.kind() != ParseError::Kind::syntax) throw;
        pos_ = saved;
      }
    }
    return term();
  }

  FieldElement term() {
    if (accept('[')) {
      FieldElement v = sum();
      expect(']');
      return v;
    }
    return sum();
  }

  FieldElement sum() {
    FieldElement acc = prod();
    for (;;) {
      const std::size_t at = (skip_space(), pos_);
      if (accept('+')) {
        acc = combine(acc, prod(), at, /*subtract=*/false);
      } else if (accept('-')) {
        acc = combine(acc, prod(), at, /*subtract=*/true);
      } else {
        return acc;
      }
    }
  }

  FieldElement combine(const FieldElement& lhs, const FieldElement& rhs, std::size_t at, bool subtract) {
    try {
      return subtract ? lhs - rhs : lhs + rhs;
    } catch (const std::domain_error& e) {
      throw ParseError(ParseError::Kind::mixed_fields, at, e.what());
    }
  }

  FieldElement prod() {
    if (int_ahead()) {
      const Integer factor = integer();
      if (accept('*')) return FieldElement(Rational(factor)) * atom();
      return FieldElement(Rational(factor));
    }
    return atom();
  }

  FieldElement atom() {
    if (int_ahead()) return FieldElement(Rational(integer()));
    if (accept('-')) return -atom();  // convenience extension
    if (accept('(')) {
      FieldElement v = sum();
      expect(')');
      return v;
    }
    if (text_.substr(pos_, 4) == "sqrt") {
      pos_ += 4;
      expect('(');
      const std::size_t at = (skip_space(), pos_);
      const Integer radicand = integer();
      expect(')');
      return surd(radicand, at);
    }
    if (pos_ >= text_.size()) fail("unexpected end of input");
    fail("unexpected '" + std::string(1, text_[pos_]) + "'");
  }

  static FieldElement surd(const Integer& radicand, std::size_t at) {
    if (radicand < 0) {
      throw ParseError(ParseError::Kind::negative_radicand, at, "negative radicand " + radicand.str());
    }
    if (radicand > kRadicandBound) {
      throw ParseError(ParseError::Kind::radicand_too_large, at,
                       "radicand " + radicand.str() + " exceeds the factoring bound 10^12");
    }
    const SquareFreeSplit split = square_free_split(radicand);
    if (split.core == 1) return FieldElement(Rational(split.root));
    return FieldElement(Rational(0), Rational(split.root), split.core);
  }
};

}  // namespace detail

/// Parses a surd expression to its exact canonical value, which is a
/// QuadraticIrrational or, when the surd part cancels, a Rational.
inline QuadraticValue parse_quadratic(std::string_view text) {
  return collapse(detail::SurdParser(text).parse());
}

}  // namespace tangentlab
