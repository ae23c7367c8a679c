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

/// @file polynomial.hpp
/// @brief Sparse multivariate and dense univariate polynomials over Q.

#include "tangentlab/numeric.hpp"

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tangentlab {

/// Exponent vector of a monomial; its length is the number of variables.
using Monomial = std::vector<unsigned>;

inline unsigned total_degree(const Monomial& m) {
  unsigned d = 0;
  for (unsigned e : m) d += e;
  return d;
}

/// "x1^2*x3", "1" for the empty product
inline std::string to_string(const Monomial& m) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += "x" + std::to_string(i + 1);
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

class UnivariatePolynomial {
 public:
  UnivariatePolynomial() = default;
  explicit UnivariatePolynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

  static UnivariatePolynomial monomial(unsigned degree, Rational coeff = 1) {
    std::vector<Rational> c(degree + 1);
    c[degree] = std::move(coeff);
    return UnivariatePolynomial(std::move(c));
  }

  /// Coefficient of t^k (0 beyond the degree).
  Rational coefficient(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }
  const std::vector<Rational>& coefficients() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial
  int degree() const { return static_cast<int>(c_.size()) - 1; }

  friend bool operator==(const UnivariatePolynomial&, const UnivariatePolynomial&) = default;

  friend UnivariatePolynomial operator+(const UnivariatePolynomial& a, const UnivariatePolynomial& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coefficient(i) + b.coefficient(i);
    return UnivariatePolynomial(std::move(c));
  }

  friend UnivariatePolynomial operator*(const UnivariatePolynomial& a, const UnivariatePolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return UnivariatePolynomial(std::move(c));
  }

  UnivariatePolynomial derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Rational> c(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * Rational(static_cast<long>(i));
    return UnivariatePolynomial(std::move(c));
  }

  /// this(inner(t))
  UnivariatePolynomial compose(const UnivariatePolynomial& inner) const {
    UnivariatePolynomial out;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) out = out * inner + UnivariatePolynomial({*it});
    return out;
  }

  Rational evaluate(const Rational& t) const {
    Rational out = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) out = out * t + *it;
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<Rational> c_;
};

/// "t + 3/2*t^2", "0"
inline std::string to_string(const UnivariatePolynomial& p, std::string_view var = "t") {
  std::string out;
  for (std::size_t k = 0; k < p.coefficients().size(); ++k) {
    const Rational& c = p.coefficients()[k];
    if (c == 0) continue;
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    std::string term;
    if (k == 0) {
      term = to_string(mag);
    } else {
      if (mag != 1) term = to_string(mag) + "*";
      term += std::string(var) + (k > 1 ? "^" + std::to_string(k) : "");
    }
    if (out.empty()) {
      out = (negative ? "-" : "") + term;
    } else {
      out += (negative ? " - " : " + ") + term;
    }
  }
  return out.empty() ? "0" : out;
}

class Polynomial {
 public:
  explicit Polynomial(std::size_t variables = 0) : vars_(variables) {}

  static Polynomial constant(std::size_t variables, const Rational& c) {
    Polynomial p(variables);
    p.add_term(Monomial(variables, 0), c);
    return p;
  }

  /// x_{index+1}
  static Polynomial variable(std::size_t variables, std::size_t index) {
    if (index >= variables) throw std::out_of_range("variable index out of range");
    Monomial m(variables, 0);
    m[index] = 1;
    Polynomial p(variables);
    p.add_term(m, 1);
    return p;
  }

  /// x1^2 + ... + xn^2
  static Polynomial squared_norm(std::size_t variables) {
    Polynomial p(variables);
    for (std::size_t i = 0; i < variables; ++i) {
      Monomial m(variables, 0);
      m[i] = 2;
      p.add_term(m, 1);
    }
    return p;
  }

  std::size_t variables() const { return vars_; }
  const std::map<Monomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Rational coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  Rational constant_term() const { return coefficient(Monomial(vars_, 0)); }

  /// Coefficient of x_{index+1}.
  Rational linear_coefficient(std::size_t index) const {
    Monomial m(vars_, 0);
    m[index] = 1;
    return coefficient(m);
  }

  /// -1 for the zero polynomial
  int total_degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(tangentlab::total_degree(m)));
    return d;
  }

  void add_term(const Monomial& m, const Rational& c) {
    if (m.size() != vars_) throw std::invalid_argument("monomial has the wrong number of variables");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  Polynomial operator-() const {
    Polynomial out(vars_);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) {
    check_compatible(a, b);
    for (const auto& [m, c] : b.terms_) a.add_term(m, c);
    return a;
  }

  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    check_compatible(a, b);
    Polynomial out(a.vars_);
    Monomial m(a.vars_);
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) {
        for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
        out.add_term(m, ca * cb);
      }
    }
    return out;
  }

  friend Polynomial operator*(const Rational& s, const Polynomial& p) {
    Polynomial out(p.vars_);
    if (s == 0) return out;
    for (const auto& [m, c] : p.terms_) out.terms_.emplace(m, s * c);
    return out;
  }

  Polynomial pow(unsigned e) const {
    Polynomial out = constant(vars_, 1);
    for (unsigned i = 0; i < e; ++i) out = out * *this;
    return out;
  }

  /// d/dx_{index+1}
  Polynomial derivative(std::size_t index) const {
    Polynomial out(vars_);
    for (const auto& [m, c] : terms_) {
      if (m[index] == 0) continue;
      Monomial dm = m;
      --dm[index];
      out.add_term(dm, c * Rational(static_cast<long>(m[index])));
    }
    return out;
  }

  /// Substitutes values[i] for x_{i+1}; all values share one variable count.
  Polynomial substitute(const std::vector<Polynomial>& values) const {
    if (values.size() != vars_) throw std::invalid_argument("substitution needs one polynomial per variable");
    const std::size_t target_vars = values.empty() ? 0 : values.front().vars_;
    Polynomial out(target_vars);
    std::vector<std::vector<Polynomial>> powers(vars_);
    for (const auto& [m, c] : terms_) {
      Polynomial term = constant(target_vars, c);
      for (std::size_t i = 0; i < vars_; ++i) {
        auto& cache = powers[i];
        while (cache.size() <= m[i]) cache.push_back(cache.empty() ? constant(target_vars, 1) : cache.back() * values[i]);
        term = term * cache[m[i]];
      }
      out = out + term;
    }
    return out;
  }

  /// Restriction to the axis of x_{index+1} (all other variables set to 0).
  UnivariatePolynomial restrict_to_axis(std::size_t index) const {
    std::vector<Rational> c;
    for (const auto& [m, coeff] : terms_) {
      bool on_axis = true;
      for (std::size_t i = 0; i < m.size(); ++i) on_axis = on_axis && (i == index || m[i] == 0);
      if (!on_axis) continue;
      if (c.size() <= m[index]) c.resize(m[index] + 1);
      c[m[index]] += coeff;
    }
    return UnivariatePolynomial(std::move(c));
  }

 private:
  static void check_compatible(const Polynomial& a, const Polynomial& b) {
    if (a.vars_ != b.vars_) throw std::invalid_argument("polynomials have different variable counts");
  }

  std::size_t vars_;
  std::map<Monomial, Rational> terms_;
};

/// psi(p) for a univariate psi and multivariate p.
inline Polynomial compose(const UnivariatePolynomial& psi, const Polynomial& p) {
  Polynomial out(p.variables());
  const auto& c = psi.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) out = out * p + Polynomial::constant(p.variables(), *it);
  return out;
}

/// Higher total degree first, then lexicographically larger exponents first.
/// "x1^2+x2^2", "3/2*x1*x2-x1", "0"
inline std::string to_string(const Polynomial& p) {
  std::vector<std::pair<Monomial, Rational>> terms(p.terms().begin(), p.terms().end());
  std::stable_sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    const unsigned da = total_degree(a.first);
    const unsigned db = total_degree(b.first);
    if (da != db) return da > db;
    return a.first > b.first;
  });
  std::string out;
  for (const auto& [m, c] : terms) {
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    const bool unit = total_degree(m) == 0;
    std::string term;
    if (unit) {
      term = to_string(mag);
    } else {
      term = (mag == 1 ? "" : to_string(mag) + "*") + to_string(m);
    }
    if (out.empty()) {
      out = (negative ? "-" : "") + term;
    } else {
      out += (negative ? "-" : "+") + term;
    }
  }
  return out.empty() ? "0" : out;
}

class PolynomialParseError : public std::invalid_argument {
 public:
  PolynomialParseError(std::size_t position, const std::string& what)
      : std::invalid_argument(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

namespace detail {

class PolynomialReader {
 public:
  PolynomialReader(std::string_view text, std::size_t variables) : text_(text), vars_(variables) {}

  Polynomial read() {
    Polynomial out(vars_);
    skip();
    if (pos_ == text_.size()) fail("empty polynomial");
    bool first = true;
    while (pos_ < text_.size()) {
      bool negative = false;
      if (text_[pos_] == '+' || text_[pos_] == '-') {
        negative = text_[pos_] == '-';
        ++pos_;
        skip();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      Polynomial t = term();
      out = out + (negative ? -t : t);
      first = false;
      skip();
    }
    return out;
  }

 private:
  std::string_view text_;
  std::size_t vars_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what) const { throw PolynomialParseError(pos_, what); }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  Integer digits() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  Polynomial factor() {
    skip();
    if (pos_ < text_.size() && text_[pos_] == 'x') {
      ++pos_;
      const Integer index = digits();
      if (index < 1 || index > vars_) fail("variable x" + index.str() + " out of range 1.." + std::to_string(vars_));
      Monomial m(vars_, 0);
      unsigned e = 1;
      skip();
      if (pos_ < text_.size() && text_[pos_] == '^') {
        ++pos_;
        const Integer exponent = digits();
        if (exponent > 64) fail("exponent too large");
        e = static_cast<unsigned>(exponent);
      }
      m[static_cast<std::size_t>(index) - 1] = e;
      Polynomial p(vars_);
      p.add_term(m, 1);
      return p;
    }
    const Integer num = digits();
    skip();
    Integer den = 1;
    if (pos_ < text_.size() && text_[pos_] == '/') {
      ++pos_;
      den = digits();
      if (den == 0) fail("zero denominator");
    }
    return Polynomial::constant(vars_, Rational(num, den));
  }

  Polynomial term() {
    Polynomial t = factor();
    skip();
    while (pos_ < text_.size() && text_[pos_] == '*') {
      ++pos_;
      t = t * factor();
      skip();
    }
    return t;
  }
};

}  // namespace detail

/// Reads sums of rational-coefficient monomials in x1..x<variables>, e.g. "3/2*x1^2*x2 - x1 + 1".
inline Polynomial parse_polynomial(std::string_view text, std::size_t variables) {
  return detail::PolynomialReader(text, variables).read();
}

}  // namespace tangentlab
