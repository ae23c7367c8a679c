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

#include "tangentlab/polynomial.hpp"

#include <gtest/gtest.h>

#include <random>

namespace tangentlab {
namespace {

Polynomial P(const char* text, std::size_t vars) { return parse_polynomial(text, vars); }

TEST(PolynomialTest, ParsesAndPrints) {
  EXPECT_EQ(to_string(P("x1^2+x2^2", 2)), "x1^2+x2^2");
  EXPECT_EQ(to_string(P(" 3/2*x1*x2 - x1 ", 2)), "3/2*x1*x2-x1");
  EXPECT_EQ(to_string(P("0", 3)), "0");
  EXPECT_EQ(to_string(P("-x1+1", 1)), "-x1+1");
  EXPECT_EQ(to_string(P("x1*x1 - x1^2", 1)), "0");
  EXPECT_EQ(to_string(P("2*x2*3", 2)), "6*x2");
}

TEST(PolynomialTest, RejectsMalformedInput) {
  EXPECT_THROW(P("", 2), PolynomialParseError);
  EXPECT_THROW(P("x3", 2), PolynomialParseError);
  EXPECT_THROW(P("x0", 2), PolynomialParseError);
  EXPECT_THROW(P("x1 x2", 2), PolynomialParseError);
  EXPECT_THROW(P("1/0", 1), PolynomialParseError);
  EXPECT_THROW(P("y1", 1), PolynomialParseError);
  try {
    P("x1+*x2", 2);
    FAIL();
  } catch (const PolynomialParseError& e) {
    EXPECT_EQ(e.position(), 3u);
  }
}

TEST(PolynomialTest, PrintParseRoundTrip) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> coeff(-5, 5), den(1, 4);
  std::uniform_int_distribution<unsigned> exp(0, 3);
  for (int trial = 0; trial < 200; ++trial) {
    Polynomial p(3);
    for (int t = 0; t < 5; ++t) p.add_term({exp(rng), exp(rng), exp(rng)}, Rational(coeff(rng), den(rng)));
    EXPECT_EQ(parse_polynomial(to_string(p), 3), p) << to_string(p);
  }
}

TEST(PolynomialTest, RingLaws) {
  const Polynomial a = P("x1+2*x2", 2), b = P("x1^2-1/3", 2), c = P("x2^3+x1*x2", 2);
  EXPECT_EQ(a * (b + c), a * b + a * c);
  EXPECT_EQ((a * b) * c, a * (b * c));
  EXPECT_EQ(a * b, b * a);
  EXPECT_EQ(a - a, Polynomial(2));
  EXPECT_EQ(a.pow(2), a * a);
  EXPECT_THROW(a + P("x1", 1), std::invalid_argument);
}

TEST(PolynomialTest, DerivativeAndSubstitution) {
  const Polynomial p = P("x1^3*x2+5*x1", 2);
  EXPECT_EQ(p.derivative(0), P("3*x1^2*x2+5", 2));
  EXPECT_EQ(p.derivative(1), P("x1^3", 2));
  // x1 -> y1 + y2, x2 -> y1 y2
  const Polynomial q = P("x1^2+x2", 2).substitute({P("x1+x2", 2), P("x1*x2", 2)});
  EXPECT_EQ(q, P("x1^2+3*x1*x2+x2^2", 2));
  EXPECT_EQ(P("x1^4+x1*x2+x1", 2).restrict_to_axis(0), UnivariatePolynomial({0, 1, 0, 0, 1}));
  EXPECT_EQ(Polynomial::squared_norm(3), P("x1^2+x2^2+x3^2", 3));
}

TEST(UnivariatePolynomialTest, Arithmetic) {
  const UnivariatePolynomial p({1, 2, 3});  // 1 + 2t + 3t^2
  EXPECT_EQ(p.degree(), 2);
  EXPECT_EQ(p.derivative(), UnivariatePolynomial({2, 6}));
  EXPECT_EQ(p.evaluate(2), Rational(17));
  EXPECT_EQ(p.compose(UnivariatePolynomial({0, 0, 1})), UnivariatePolynomial({1, 0, 2, 0, 3}));
  EXPECT_EQ(UnivariatePolynomial({0, 0}).degree(), -1);
  EXPECT_EQ(to_string(UnivariatePolynomial({0, 1, Rational(3, 2)})), "t + 3/2*t^2");
  EXPECT_EQ(to_string(UnivariatePolynomial({-1, 0, -1})), "-1 - t^2");
}

TEST(UnivariatePolynomialTest, ComposeIntoMultivariate) {
  const Polynomial r = Polynomial::squared_norm(2);
  EXPECT_EQ(compose(UnivariatePolynomial({0, 0, 1}), r), P("x1^4+2*x1^2*x2^2+x2^4", 2));
  EXPECT_EQ(compose(UnivariatePolynomial(), r), Polynomial(2));
}

}  // namespace
}  // namespace tangentlab
