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

#include "tangentlab/functor_core.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

namespace tangentlab {
namespace {

using testing::qi;

Space T(const char* slope) { return Space::torus(qi(slope)); }

std::vector<FunctorKind> all_kinds(const std::vector<Space>& tests) {
  std::vector<FunctorKind> out = {FunctorKind::internal(), FunctorKind::right(), FunctorKind::vincent()};
  for (const auto& y : tests) {
    out.push_back(FunctorKind::y_internal(y));
    out.push_back(FunctorKind::y_right(y));
  }
  return out;
}

TEST(TangentTest, Examples) {
  EXPECT_EQ(tangent(Space::euclidean(3), FunctorKind::internal()).dimension, 3u);
  EXPECT_EQ(tangent(T("sqrt(2)"), FunctorKind::y_internal(T("sqrt(3)"))).dimension, 0u);
  EXPECT_EQ(tangent(Space::orbit(2), FunctorKind::y_right(Space::orbit(3))).dimension, 0u);
  EXPECT_EQ(tangent(T("sqrt(2)"), FunctorKind::internal()).generators, std::vector<std::string>{kTorusGenerator});
  EXPECT_EQ(tangent(Space::orbit(3), FunctorKind::right()).generators, std::vector<std::string>{"D_n"});
  EXPECT_EQ(tangent(Space::euclidean(2), FunctorKind::right()).generators,
            (std::vector<std::string>{"∂/∂x1", "∂/∂x2"}));
}

TEST(TangentTest, ArityIsChecked) {
  EXPECT_THROW(tangent(Space::euclidean(1), FunctorKind{FunctorFamily::y_right, std::nullopt}),
               std::invalid_argument);
  EXPECT_THROW(tangent(Space::euclidean(1), FunctorKind{FunctorFamily::right, Space::euclidean(1)}),
               std::invalid_argument);
}

TEST(TangentTest, ClassicalTable) {
  for (unsigned k = 0; k <= 3; ++k) {
    for (auto kind : {FunctorKind::internal(), FunctorKind::vincent(), FunctorKind::right()}) {
      EXPECT_EQ(tangent(Space::euclidean(k), kind).dimension, k);
    }
  }
  const Space t = T("sqrt(2)");
  EXPECT_EQ(tangent(t, FunctorKind::internal()).dimension, 1u);
  EXPECT_EQ(tangent(t, FunctorKind::vincent()).dimension, 0u);
  EXPECT_EQ(tangent(t, FunctorKind::right()).dimension, 0u);
  for (unsigned n = 1; n <= 4; ++n) {
    EXPECT_EQ(tangent(Space::orbit(n), FunctorKind::internal()).dimension, 0u);
    EXPECT_EQ(tangent(Space::orbit(n), FunctorKind::vincent()).dimension, 0u);
    EXPECT_EQ(tangent(Space::orbit(n), FunctorKind::right()).dimension, 1u);
  }
}

TEST(TangentTest, ReportsAreConsistent) {
  const auto spaces = catalog();
  for (const auto& s : spaces) {
    for (const auto& kind : all_kinds(spaces)) {
      const TangentReport r = tangent(s, kind);
      EXPECT_EQ(r.space, s);
      EXPECT_EQ(r.functor, kind);
      EXPECT_FALSE(r.justification.empty());
      if (r.dimension) {
        EXPECT_EQ(*r.dimension, r.generators.size());
        EXPECT_NE(r.status, Status::undetermined_by_paper);
      } else {
        EXPECT_EQ(r.status, Status::undetermined_by_paper);
      }
    }
  }
}

TEST(TangentTest, VincentSandwich) {
  const auto spaces = catalog();
  for (const auto& s : spaces) {
    EXPECT_LE(*tangent(s, FunctorKind::vincent()).dimension, *tangent(s, FunctorKind::right()).dimension);
    EXPECT_LE(*tangent(s, FunctorKind::vincent()).dimension, *tangent(s, FunctorKind::internal()).dimension);
  }
  // on Euclidean spaces all five agree whenever the test space has the relevant tangent vector
  for (unsigned k = 0; k <= 3; ++k) {
    for (const auto& y : {Space::euclidean(1), Space::euclidean(2), T("sqrt(5)")}) {
      EXPECT_EQ(tangent(Space::euclidean(k), FunctorKind::y_internal(y)).dimension, k);
    }
    for (const auto& y : {Space::euclidean(1), Space::euclidean(3), Space::orbit(2)}) {
      EXPECT_EQ(tangent(Space::euclidean(k), FunctorKind::y_right(y)).dimension, k);
    }
  }
}

TEST(TangentTest, TestSpaceRIsVincent) {
  for (const auto& s : catalog()) {
    const auto vincent = tangent(s, FunctorKind::vincent()).dimension;
    EXPECT_EQ(tangent(s, FunctorKind::y_internal(Space::euclidean(1))).dimension, vincent) << to_string(s);
    EXPECT_EQ(tangent(s, FunctorKind::y_right(Space::euclidean(1))).dimension, vincent) << to_string(s);
  }
}

TEST(TangentTest, VanishingAndUndeterminedCells) {
  // torus tested against Euclidean or orbit spaces
  EXPECT_EQ(tangent(T("sqrt(2)"), FunctorKind::y_internal(Space::euclidean(2))).dimension, 0u);
  EXPECT_EQ(tangent(T("sqrt(2)"), FunctorKind::y_internal(Space::orbit(2))).dimension, 0u);
  EXPECT_EQ(tangent(T("sqrt(2)"), FunctorKind::y_right(Space::orbit(2))).dimension, 0u);
  // test spaces without the relevant vector
  EXPECT_EQ(tangent(Space::euclidean(2), FunctorKind::y_right(T("sqrt(2)"))).dimension, 0u);
  EXPECT_EQ(tangent(Space::euclidean(2), FunctorKind::y_internal(Space::orbit(1))).dimension, 0u);
  EXPECT_EQ(tangent(Space::euclidean(2), FunctorKind::y_internal(Space::euclidean(0))).dimension, 0u);
  // the only unclassified hom-sets
  for (unsigned j = 2; j <= 3; ++j) {
    const TangentReport r = tangent(Space::orbit(3), FunctorKind::y_right(Space::euclidean(j)));
    EXPECT_FALSE(r.dimension);
    EXPECT_EQ(r.status, Status::undetermined_by_paper);
  }
}

TEST(TangentTest, TorusIndicatorOverPool) {
  const auto pool = testing::parse_all(testing::slope_pool_text());
  for (const auto& a : pool) {
    for (const auto& b : pool) {
      const TangentReport r = tangent(Space::torus(a), FunctorKind::y_internal(Space::torus(b)));
      EXPECT_EQ(*r.dimension, a.d() == b.d() ? 1u : 0u);
      if (a.d() == b.d()) {
        EXPECT_TRUE(witnesses(std::get<MobiusWitness>(r.witness), a, b));
      }
    }
  }
}

TEST(TangentTest, OrbitMatrix) {
  for (unsigned m = 1; m <= 4; ++m)
    for (unsigned n = 1; n <= 4; ++n)
      EXPECT_EQ(*tangent(Space::orbit(n), FunctorKind::y_right(Space::orbit(m))).dimension, m <= n ? 1u : 0u);
}

TEST(AxiomCheckTest, PassesUnderHypothesis) {
  std::vector<FunctorKind> kinds = {FunctorKind::internal(), FunctorKind::right(), FunctorKind::vincent(),
                                    FunctorKind::y_internal(T("sqrt(2)")),
                                    FunctorKind::y_internal(Space::euclidean(1))};
  for (unsigned n = 1; n <= 3; ++n) kinds.push_back(FunctorKind::y_right(Space::orbit(n)));
  for (const auto& k : kinds) {
    const AxiomReport r = functor_axiom_check(k);
    EXPECT_TRUE(r.passed()) << to_string(k);
    EXPECT_GT(r.checks.size(), 8u);
  }
}

TEST(AxiomCheckTest, HypothesisNotMet) {
  EXPECT_THROW(functor_axiom_check(FunctorKind::y_right(T("sqrt(2)"))), HypothesisNotMet);
  EXPECT_THROW(functor_axiom_check(FunctorKind::y_internal(Space::orbit(2))), HypothesisNotMet);
  EXPECT_THROW(functor_axiom_check(FunctorKind::y_right(Space::euclidean(0))), HypothesisNotMet);
}

TEST(AxiomCheckTest, CurveAndDerivationModelsAgree) {
  for (const auto& f : registered_maps()) {
    EXPECT_EQ(detail::curve_model(f), detail::derivation_model(f)) << f.name;
  }
  // B(x1, x2) = (x1 + x2, 3 x2, x1 - x2 + x1 x2) has Jacobian [[1,1],[0,3],[1,-1]] at 0
  EXPECT_EQ(detail::curve_model(registered_maps()[1]),
            (detail::Matrix{{1, 1}, {0, 3}, {1, -1}}));
}

TEST(DistinguishTest, Examples) {
  EXPECT_EQ(distinguish(FunctorKind::y_internal(T("sqrt(2)")), FunctorKind::y_internal(T("sqrt(3)"))),
            T("sqrt(2)"));
  EXPECT_EQ(distinguish(FunctorKind::y_right(Space::orbit(1)), FunctorKind::y_right(Space::orbit(2))),
            Space::orbit(1));
  EXPECT_EQ(distinguish(FunctorKind::internal(), FunctorKind::internal()), std::nullopt);
  EXPECT_EQ(distinguish(FunctorKind::y_internal(T("sqrt(2)")), FunctorKind::y_internal(T("1+sqrt(2)"))),
            std::nullopt);
  EXPECT_EQ(distinguish(FunctorKind::internal(), FunctorKind::right()), T("sqrt(2)"));
}

TEST(DistinguishTest, SeparationIsSound) {
  const auto spaces = catalog();
  const auto kinds = all_kinds({Space::euclidean(1), T("sqrt(2)"), T("sqrt(7)"), Space::orbit(1), Space::orbit(3)});
  for (const auto& a : kinds) {
    for (const auto& b : kinds) {
      const auto sep = distinguish(a, b);
      if (!sep) continue;
      const auto da = tangent(*sep, a).dimension;
      const auto db = tangent(*sep, b).dimension;
      ASSERT_TRUE(da && db);
      EXPECT_NE(*da, *db);
    }
  }
}

TEST(DistinguishTest, CrossBlockPoolPairsAndOrbitsSeparate) {
  const auto pool = testing::parse_all(testing::slope_pool_text());
  for (const auto& a : pool)
    for (const auto& b : pool)
      EXPECT_EQ(distinguish(FunctorKind::y_internal(Space::torus(a)), FunctorKind::y_internal(Space::torus(b)))
                    .has_value(),
                a.d() != b.d());
  for (unsigned m = 1; m <= 4; ++m)
    for (unsigned k = 1; k <= 4; ++k)
      EXPECT_EQ(distinguish(FunctorKind::y_right(Space::orbit(m)), FunctorKind::y_right(Space::orbit(k))).has_value(),
                m != k);
}

}  // namespace
}  // namespace tangentlab
