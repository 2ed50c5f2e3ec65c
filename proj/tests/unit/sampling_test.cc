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

#include "dsum/sampling.h"

#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <set>

#include "dsum/bit_source.h"
#include "dsum/errors.h"
#include "test_util.h"

namespace dsum {
namespace {

TEST(BitSourceTest, DeterministicInSeed) {
  BitSource a(42), b(42), c(43);
  bool differs = false;
  for (int i = 0; i < 256; ++i) {
    const bool x = a.Bit();
    EXPECT_EQ(x, b.Bit());
    differs |= x != c.Bit();
  }
  EXPECT_TRUE(differs);
}

TEST(BitSourceTest, CountsBitsExactly) {
  BitSource s(1);
  s.Bits(5);
  EXPECT_EQ(s.bits_consumed(), 5u);
  s.Uniform(8);
  EXPECT_EQ(s.bits_consumed(), 8u);
  s.Uniform(1);
  EXPECT_EQ(s.bits_consumed(), 8u);
  s.Bit();
  EXPECT_EQ(s.bits_consumed(), 9u);
}

TEST(BitSourceTest, UniformNonPowerOfTwoIsUnbiased) {
  BitSource s(7);
  std::map<int, int> counts;
  const int kDraws = 60000;
  for (int i = 0; i < kDraws; ++i) ++counts[s.Uniform(3)];
  ASSERT_EQ(counts.size(), 3u);
  for (const auto& [v, c] : counts) {
    EXPECT_NEAR(c / double(kDraws), 1.0 / 3, 0.01) << v;
  }
}

TEST(BitSourceTest, BernoulliMatchesProbabilityAndEdgeCases) {
  BitSource s(9);
  int ones = 0;
  for (int i = 0; i < 100000; ++i) ones += s.Bernoulli(0.3);
  EXPECT_NEAR(ones / 1e5, 0.3, 0.01);
  const auto before = s.bits_consumed();
  EXPECT_FALSE(s.Bernoulli(0.0));
  EXPECT_TRUE(s.Bernoulli(1.0));
  EXPECT_EQ(s.bits_consumed(), before);
}

TEST(BitSourceTest, DerivedStreamsDiffer) {
  std::set<std::uint64_t> seeds;
  for (std::uint64_t i = 0; i < 100; ++i) {
    seeds.insert(BitSource::Derive(5, i).seed());
  }
  EXPECT_EQ(seeds.size(), 100u);
  EXPECT_EQ(BitSource::Derive(5, 3).seed(), BitSource::Derive(5, 3).seed());
}

TEST(NoiseSampleTest, AgreementRateMatchesCorrelation) {
  const GridDomain g = GridDomain::Uniform(2, 1);
  for (double rho : {0.5, -0.5, 0.0}) {
    BitSource s(3);
    int same = 0;
    const int kDraws = 100000;
    for (int i = 0; i < kDraws; ++i) {
      same += NoiseSample(g, GridPoint({1}), rho, s)[0] == 1;
    }
    EXPECT_NEAR(same / double(kDraws), (1 + rho) / 2, 0.01) << rho;
  }
}

TEST(NoiseSampleTest, RejectsBadCorrelation) {
  BitSource s(1);
  const GridPoint x({0, 0});
  EXPECT_THROW(NoiseSample(GridDomain::Uniform(2, 2), x, 1.0, s),
               PreconditionError);
  EXPECT_THROW(NoiseSample(GridDomain::Uniform(3, 2), x, -0.5, s),
               UnsupportedParameter);
}

TEST(NoiseSampleTest, CorrelationForAgreement) {
  EXPECT_DOUBLE_EQ(CorrelationForAgreement(1.0, 4), 1.0);
  EXPECT_DOUBLE_EQ(CorrelationForAgreement(0.25, 4), 0.0);
  EXPECT_DOUBLE_EQ(CorrelationForAgreement(0.75, 2), 0.5);
}

TEST(RestrictionTest, PatternWeightsSumToOne) {
  for (int d = 1; d <= 4; ++d) {
    Rational total = 0;
    std::uint64_t patterns = 1;
    for (int i = 0; i < d; ++i) patterns *= 3;
    for (std::uint64_t p = 0; p < patterns; ++p) {
      total += RestrictionPattern::FromIndex(p, d).Weight();
    }
    EXPECT_EQ(total, 1) << d;
  }
  EXPECT_EQ(RestrictionPattern::AllFree(2).Weight(), Rational(1, 4));
  EXPECT_EQ(RestrictionPattern::AllFree(3).FreeCount(), 3);
}

TEST(RestrictionTest, SampledActionFrequencies) {
  BitSource s(11);
  std::map<RestrictionAction, int> counts;
  for (int i = 0; i < 20000; ++i) ++counts[SampleRestriction(1, s)[0]];
  EXPECT_NEAR(counts[RestrictionAction::kFree] / 2e4, 0.5, 0.015);
  EXPECT_NEAR(counts[RestrictionAction::kFixZero] / 2e4, 0.25, 0.015);
  EXPECT_NEAR(counts[RestrictionAction::kFixOne] / 2e4, 0.25, 0.015);
}

// The four points of each pattern obey the test's structure.
TEST(SampleQueriesTest, DiamondStructure) {
  const GridDomain g = GridDomain::Uniform(5, 6);
  BitSource s(2);
  for (int t = 0; t < 500; ++t) {
    const auto q = SampleQueries(QueryPattern::kDiamond, g, s).points;
    ASSERT_EQ(q.size(), 4u);
    for (int i = 0; i < 6; ++i) {
      // q1 = a, q4 = b; q2 and q3 split a_i, b_i between them.
      const std::multiset<int> lhs = {q[0][i], q[3][i]};
      const std::multiset<int> rhs = {q[1][i], q[2][i]};
      EXPECT_EQ(lhs, rhs);
    }
  }
}

TEST(SampleQueriesTest, SquareInCubeStructure) {
  const GridDomain g = GridDomain::Uniform(4, 6);
  BitSource s(3);
  for (int t = 0; t < 500; ++t) {
    const auto q = SampleQueries(QueryPattern::kSquareInCube, g, s).points;
    for (int i = 0; i < 6; ++i) {
      // Each coordinate value appears an even number of times.
      std::map<int, int> c;
      for (const auto& p : q) ++c[p[i]];
      for (const auto& [v, k] : c) EXPECT_EQ(k % 2, 0);
    }
  }
}

// Every individual query is uniform on the grid: frequency test per query
// position over all n^d points.
class QueryMarginalTest : public ::testing::TestWithParam<QueryPattern> {};

TEST_P(QueryMarginalTest, EachQueryIsUniform) {
  const GridDomain g = GridDomain::Uniform(3, 2);
  BitSource s(17);
  const int kDraws = 90000;
  std::vector<std::map<std::uint64_t, int>> counts(4);
  for (int t = 0; t < kDraws; ++t) {
    const auto q = SampleQueries(GetParam(), g, s).points;
    for (int j = 0; j < 4; ++j) ++counts[j][g.IndexOf(q[j])];
  }
  for (int j = 0; j < 4; ++j) {
    ASSERT_EQ(counts[j].size(), 9u);
    for (const auto& [idx, c] : counts[j]) {
      // 10000 expected, sd ~ 94.
      EXPECT_NEAR(c, kDraws / 9.0, 500) << "query " << j << " point " << idx;
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Patterns, QueryMarginalTest,
                         ::testing::Values(QueryPattern::kSquareInCube,
                                           QueryPattern::kDiamond,
                                           QueryPattern::kDiamondInCube));

TEST(ExpectedLazyBitsTest, ClosedForms) {
  EXPECT_DOUBLE_EQ(ExpectedLazyBits(QueryPattern::kSquareInCube, 4, 100), 550);
  EXPECT_DOUBLE_EQ(ExpectedLazyBits(QueryPattern::kDiamond, 16, 100), 893.75);
  EXPECT_DOUBLE_EQ(ExpectedLazyBits(QueryPattern::kDiamondInCube, 16, 100),
                   850);
  EXPECT_THROW(ExpectedLazyBits(QueryPattern::kDiamond, 3, 10),
               UnsupportedParameter);
}

TEST(ExpectedLazyBitsTest, SingleDrawBitsAreCounted) {
  const GridDomain g = GridDomain::Uniform(4, 10);
  BitSource s(5);
  const auto before = s.bits_consumed();
  const QuerySample q = SampleQueries(QueryPattern::kDiamond, g, s);
  EXPECT_EQ(q.bits, s.bits_consumed() - before);
  // a and b take 2 bits per coordinate; x adds at most 1.
  EXPECT_GE(q.bits, 40u);
  EXPECT_LE(q.bits, 50u);
}

TEST(PowerOfTwoTest, Basics) {
  EXPECT_TRUE(IsPowerOfTwo(16));
  EXPECT_FALSE(IsPowerOfTwo(12));
  EXPECT_EQ(Log2Exact(16), 4);
  EXPECT_THROW(Log2Exact(6), UnsupportedParameter);
}

}  // namespace
}  // namespace dsum
