// Copyright 2026 The dsum Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dsum/exact.h"

#include <gtest/gtest.h>

#include "dsum/errors.h"
#include "dsum/estimate.h"
#include "dsum/function_spec.h"
#include "dsum/golden.h"
#include "test_util.h"

namespace dsum {
namespace {

using testing::FunctionByIndex;
using testing::TestDataPath;

TEST(ExactTest, MatchesIndependentOracle) {
  const auto entries = ReadGoldenFile(TestDataPath("golden/exact_values.txt"));
  ASSERT_GE(entries.size(), 25u);
  for (const GoldenEntry& e : entries) {
    const BuiltFunction f = BuildFunction(e.function);
    EXPECT_EQ(ExactRejectionProbability(ParseTestSpec(e.test), f.function).value,
              e.value)
        << e.test << " " << e.function;
  }
}

TEST(ExactTest, DirectSumsHaveZeroRejection) {
  for (int n : {2, 3}) {
    for (int d : {1, 2, 3}) {
      const GridDomain g = GridDomain::Uniform(n, d);
      const std::uint64_t count = *DirectSum::CanonicalCount(g);
      for (TestKind k : AllTestKinds()) {
        if (k == TestKind::kBlrLinearity) continue;
        const TestSpec spec{k, k == TestKind::kDegree ? 2 : 1,
                            k == TestKind::kRhoDiamond ? Rational(1, 3)
                                                       : Rational(0)};
        try {
          ValidateTestDomain(spec, g);
        } catch (const UnsupportedParameter&) {
          continue;
        }
        if (RandomnessSpaceSize(spec, g) > 1e7) continue;
        for (std::uint64_t i = 0; i < count; ++i) {
          const auto f =
              BooleanFunction::FromDirectSum(DirectSum::FromCanonicalIndex(g, i));
          EXPECT_EQ(ExactRejectionProbability(spec, f).value, 0)
              << spec.ToString() << " n=" << n << " d=" << d << " #" << i;
        }
      }
    }
  }
}

TEST(ExactTest, NonDirectSumsAreRejectedByDiamond) {
  const TestSpec spec{TestKind::kDiamond, 1, 0};
  for (std::uint64_t i = 0; i < 256; ++i) {
    const BooleanFunction f = FunctionByIndex(3, i);
    const bool affine = ExactRejectionProbability(
                            TestSpec{TestKind::kBlrAffinity, 1, 0}, f)
                            .value == 0;
    EXPECT_EQ(ExactRejectionProbability(spec, f).value == 0, affine) << i;
  }
}

TEST(ExactTest, SubcubeEmbeddingsAgree) {
  const TestSpec sic{TestKind::kSquareInCube, 1, 0};
  const TestSpec aos_blr{TestKind::kAffineOnSubcubeBlr, 1, 0};
  const TestSpec dic{TestKind::kDiamondInCube, 1, 0};
  const TestSpec aos_dia{TestKind::kAffineOnSubcubeDiamond, 1, 0};
  for (std::uint64_t i = 0; i < 16; ++i) {
    const BooleanFunction f = FunctionByIndex(2, i);
    EXPECT_EQ(ExactRejectionProbability(sic, f).value,
              ExactRejectionProbability(aos_blr, f).value);
    EXPECT_EQ(ExactRejectionProbability(dic, f).value,
              ExactRejectionProbability(aos_dia, f).value);
  }
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const BooleanFunction f = RandomFunction(GridDomain::Uniform(3, 2), seed);
    EXPECT_EQ(ExactRejectionProbability(sic, f).value,
              ExactRejectionProbability(aos_blr, f).value);
    EXPECT_EQ(ExactRejectionProbability(dic, f).value,
              ExactRejectionProbability(aos_dia, f).value);
  }
}

TEST(ExactTest, RefusesOverBudget) {
  const BooleanFunction f = RandomFunction(GridDomain::Uniform(3, 6), 1);
  const TestSpec spec{TestKind::kDiamond, 1, 0};
  EXPECT_GT(RandomnessSpaceSize(spec, f.domain()), 1e6);
  try {
    ExactRejectionProbability(spec, f, 1000000);
    FAIL() << "expected refusal";
  } catch (const BudgetExceeded& e) {
    EXPECT_EQ(e.budget(), 1000000u);
    EXPECT_GT(e.required(), 1000000.0L);
  }
}

TEST(ExactTest, RandomnessSpaceSizes) {
  const GridDomain g = GridDomain::Uniform(3, 2);
  EXPECT_EQ(RandomnessSpaceSize(TestSpec{TestKind::kDiamond, 1, 0}, g),
            81.0L * 4);
  EXPECT_EQ(RandomnessSpaceSize(TestSpec{TestKind::kDegree, 2, 0}, g),
            81.0L * 256);
}

TEST(ExactTest, Diamond4) {
  const BooleanFunction zero = Constant(GridDomain::Uniform(2, 2), false);
  const BooleanFunction one = Constant(GridDomain::Uniform(2, 2), true);
  EXPECT_EQ(ExactDiamond4Rejection(zero, zero, zero, zero).value, 0);
  EXPECT_EQ(ExactDiamond4Rejection(zero, zero, zero, one).value, 1);
  EXPECT_EQ(ExactDiamond4Rejection(And(2), And(2), And(2), And(2)).value,
            Rational(1, 8));
}

TEST(ExactTest, DirectProduct) {
  const GridDomain g = GridDomain::Uniform(2, 2);
  EXPECT_EQ(ExactDirectProductRejection(TupleFunction(g, {{0, 1}, {2, 3}}))
                .value,
            0);
  const TupleFunction f = TupleFunction::Constant(g, {0, 0})
                              .WithOverride(GridPoint({1, 1}), 0, 7);
  const Rational p = ExactDirectProductRejection(f).value;
  EXPECT_GT(p, 0);
  EXPECT_LT(p, 1);
}

TEST(ExactTest, MonteCarloCoversExactValue) {
  const auto entries = ReadGoldenFile(TestDataPath("golden/exact_values.txt"));
  std::uint64_t seed = 100;
  for (const GoldenEntry& e : entries) {
    const Estimate est = EstimateRejection(
        ParseTestSpec(e.test), BuildFunction(e.function).function, 20000,
        ++seed);
    EXPECT_TRUE(est.Contains(ToDouble(e.value)))
        << e.test << " " << e.function << " est " << est.value;
  }
}

}  // namespace
}  // namespace dsum
