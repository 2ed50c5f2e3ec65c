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

#include <gtest/gtest.h>

#include <fstream>
#include <set>
#include <sstream>

#include "dsum/boolean_function.h"
#include "dsum/direct_sum.h"
#include "dsum/dstt.h"
#include "dsum/errors.h"
#include "dsum/golden.h"
#include "dsum/truth_table.h"
#include "test_util.h"

namespace dsum {
namespace {

using ::dsum::testing::AllPoints;
using ::dsum::testing::TestDataPath;

TEST(TruthTableTest, SetGetCount) {
  TruthTable t(130);
  t.Set(0, true);
  t.Set(64, true);
  t.Set(129, true);
  EXPECT_EQ(t.CountOnes(), 3u);
  t.Flip(64);
  EXPECT_FALSE(t.Get(64));
  TruthTable u(130);
  u.Set(5, true);
  EXPECT_EQ(t.CountDifferences(u), 3u);
  t ^= u;
  EXPECT_TRUE(t.Get(5));
  EXPECT_EQ(TruthTable::FromString("0110").ToString(), "0110");
  EXPECT_THROW(TruthTable::FromString("012"), PreconditionError);
}

TEST(DirectSumTest, CanonicalFormAbsorbsConstants) {
  const GridDomain g = GridDomain::Uniform(3, 2);
  const DirectSum a(g, {{0, 1, 0}, {1, 1, 0}});
  const DirectSum b(g, {{1, 0, 1}, {0, 0, 1}});
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.tables()[1][0], 0);
  for (const auto& p : AllPoints(g)) EXPECT_EQ(a.Eval(p), b.Eval(p));
}

TEST(DirectSumTest, CanonicalCountAndEnumerationAreDistinct) {
  const GridDomain g = GridDomain::Uniform(3, 2);
  // 2^{3 + 2} canonical forms.
  ASSERT_EQ(DirectSum::CanonicalCount(g), 32u);
  std::set<std::string> tables;
  for (std::uint64_t i = 0; i < 32; ++i) {
    const auto f = BooleanFunction::FromDirectSum(DirectSum::FromCanonicalIndex(g, i));
    tables.insert(f.Tabulate().ToString());
  }
  EXPECT_EQ(tables.size(), 32u);
  EXPECT_EQ(DirectSum::CanonicalCount(GridDomain::Uniform(2, 4)), 32u);
  EXPECT_FALSE(DirectSum::CanonicalCount(GridDomain::Uniform(2, 70)));
  EXPECT_THROW(DirectSum::FromCanonicalIndex(g, 32), PreconditionError);
}

TEST(DirectSumTest, RejectsMalformedTables) {
  const GridDomain g = GridDomain::Uniform(2, 2);
  EXPECT_THROW(DirectSum(g, {{0, 1}}), PreconditionError);
  EXPECT_THROW(DirectSum(g, {{0, 1}, {0, 2}}), PreconditionError);
  EXPECT_THROW(DirectSum(g, {{0, 1}, {0, 1, 0}}), PreconditionError);
  const DirectSum z = DirectSum::Zero(g);
  EXPECT_THROW(z.Eval(GridPoint({0, 2})), PreconditionError);
}

TEST(BooleanFunctionTest, NamedFamilies) {
  const BooleanFunction maj = Majority(3);
  EXPECT_TRUE(maj(GridPoint({1, 1, 0})));
  EXPECT_FALSE(maj(GridPoint({1, 0, 0})));
  EXPECT_THROW(Majority(4), PreconditionError);

  const BooleanFunction conj = And(2);
  EXPECT_EQ(conj.Tabulate().ToString(), "0001");

  const BooleanFunction par = Parity(GridDomain::Uniform(3, 2));
  EXPECT_TRUE(par(GridPoint({1, 2})));
  EXPECT_FALSE(par(GridPoint({1, 1})));
  EXPECT_NE(par.direct_sum(), nullptr);

  EXPECT_EQ(Constant(GridDomain::Uniform(2, 2), true).Tabulate().ToString(),
            "1111");
  const BooleanFunction dict = Dictator(GridDomain::Uniform(2, 2), 0);
  EXPECT_EQ(dict.Tabulate().ToString(), "0011");
  EXPECT_THROW(Dictator(GridDomain::Uniform(2, 2), 2), PreconditionError);
}

TEST(BooleanFunctionTest, EvalChecksDomain) {
  EXPECT_THROW(And(2)(GridPoint({0, 2})), PreconditionError);
  EXPECT_THROW(And(2)(GridPoint({0})), PreconditionError);
}

TEST(BooleanFunctionTest, RandomFunctionIsSeedDeterministic) {
  const GridDomain g = GridDomain::Uniform(2, 6);
  EXPECT_EQ(RandomFunction(g, 3).Tabulate(), RandomFunction(g, 3).Tabulate());
  EXPECT_NE(RandomFunction(g, 3).Tabulate(), RandomFunction(g, 4).Tabulate());
}

TEST(BooleanFunctionTest, TabulateRefusesOverBudget) {
  EXPECT_THROW(Majority(21).Tabulate(1000), BudgetExceeded);
}

TEST(DistExactTest, Examples) {
  EXPECT_EQ(DistExact(And(2), Constant(GridDomain::Uniform(2, 2), false)),
            Rational(1, 4));
  EXPECT_EQ(DistExact(And(3), And(3)), 0);
  EXPECT_THROW(DistExact(And(2), And(3)), PreconditionError);
}

TEST(CorruptionTest, ExactFractionFlipsExactlyThatMany) {
  const BooleanFunction f = Parity(GridDomain::Uniform(3, 4));
  BitSource src(8);
  const Corruption c = CorruptExactFraction(f, Rational(1, 10), src);
  EXPECT_EQ(c.flipped.size(), 8u);  // floor(81 / 10)
  EXPECT_EQ(c.realized_fraction, Rational(8, 81));
  EXPECT_EQ(DistExact(f, c.function), Rational(8, 81));
  std::set<std::uint64_t> unique(c.flipped.begin(), c.flipped.end());
  EXPECT_EQ(unique.size(), 8u);
}

TEST(CorruptionTest, RateIsSeedDeterministic) {
  const BooleanFunction f = Constant(GridDomain::Uniform(2, 10), false);
  BitSource a(4), b(4);
  const Corruption x = CorruptAtRate(f, 0.1, a);
  const Corruption y = CorruptAtRate(f, 0.1, b);
  EXPECT_EQ(x.flipped, y.flipped);
  EXPECT_NEAR(ToDouble(x.realized_fraction), 0.1, 0.03);
  EXPECT_THROW(CorruptAtRate(f, 1.5, a), PreconditionError);
}

TEST(CorruptionTest, CorruptPoints) {
  const BooleanFunction f = And(2);
  const std::vector<GridPoint> pts = {GridPoint({1, 1})};
  const Corruption c = CorruptPoints(f, pts);
  EXPECT_EQ(c.function.Tabulate().ToString(), "0000");
  EXPECT_EQ(c.flipped, std::vector<std::uint64_t>({3}));
}

TEST(RestrictionTest, FixesAndFreesCoordinates) {
  // f = x1 x2 + x3 on F_2^3.
  const BooleanFunction f = BooleanFunction::FromPredicate(
      GridDomain::Uniform(2, 3),
      [](const GridPoint& p) { return ((p[0] & p[1]) ^ p[2]) != 0; }, "f");
  const RestrictionPattern fix_first_one({RestrictionAction::kFixOne,
                                          RestrictionAction::kFree,
                                          RestrictionAction::kFree});
  // x2 + x3 on the two free coordinates.
  EXPECT_EQ(ApplyRestriction(f, fix_first_one).Tabulate().ToString(), "0110");
  const RestrictionPattern all_fixed({RestrictionAction::kFixOne,
                                      RestrictionAction::kFixOne,
                                      RestrictionAction::kFixZero});
  const BooleanFunction c = ApplyRestriction(f, all_fixed);
  EXPECT_EQ(c.domain().dimension(), 0);
  EXPECT_TRUE(c.Eval(GridPoint()));
  EXPECT_THROW(ApplyRestriction(Parity(GridDomain::Uniform(3, 3)),
                                RestrictionPattern::AllFree(3)),
               UnsupportedParameter);
}

TEST(DsttTest, RoundTrip) {
  const BooleanFunction f = RandomFunction(GridDomain::Uniform(3, 3), 12);
  std::stringstream buf;
  WriteDstt(buf, f);
  EXPECT_EQ(buf.str().substr(0, 8), "n=3 d=3\n");
  const BooleanFunction g = ReadDstt(buf);
  EXPECT_EQ(g.domain(), f.domain());
  EXPECT_EQ(g.Tabulate(), f.Tabulate());
}

TEST(DsttTest, ReadsFixtureFiles) {
  EXPECT_EQ(ReadDsttFile(TestDataPath("data/and2.dstt")).Tabulate(),
            And(2).Tabulate());
  EXPECT_EQ(ReadDsttFile(TestDataPath("data/parity3.dstt")).Tabulate(),
            Parity(GridDomain::Uniform(2, 3)).Tabulate());
}

TEST(DsttTest, MalformedInputNamesTheLine) {
  auto location_of = [](const std::string& text) {
    std::istringstream in(text);
    try {
      ReadDstt(in);
    } catch (const ConfigError& e) {
      return e.location();
    }
    return std::string("no error");
  };
  EXPECT_EQ(location_of("n=2 d=2 \n0001\n"), "line 1");
  EXPECT_EQ(location_of("n=2,d=2\n0001\n"), "line 1");
  EXPECT_EQ(location_of("n=1 d=2\n0\n"), "line 1");
  EXPECT_EQ(location_of("n=2 d=2\n0001"), "line 2");
  EXPECT_EQ(location_of("n=2 d=2\n000\n"), "line 2");
  EXPECT_EQ(location_of("n=2 d=2\n00x1\n"), "line 2");
  EXPECT_EQ(location_of("n=2 d=2\n0001\nextra\n"), "line 3");
  EXPECT_EQ(location_of("n=2 d=2\n0001\n"), "no error");
  EXPECT_THROW(ReadDsttFile(TestDataPath("data/bad_char.dstt")), ConfigError);
  EXPECT_THROW(ReadDsttFile(TestDataPath("data/missing.dstt")), ConfigError);
}

TEST(DsttTest, RefusesOversizedHeader) {
  std::istringstream in("n=2 d=40\n0\n");
  EXPECT_THROW(ReadDstt(in, 1 << 20), BudgetExceeded);
}

TEST(GoldenTest, ParsesAndWrites) {
  std::istringstream in(
      "# header\n\n1/8  # diamond and:d=2\n-3/4 #  shapka  ds:n=3,d=3\n");
  const auto entries = ReadGolden(in);
  ASSERT_EQ(entries.size(), 2u);
  EXPECT_EQ(entries[0].value, Rational(1, 8));
  EXPECT_EQ(entries[0].test, "diamond");
  EXPECT_EQ(entries[0].function, "and:d=2");
  EXPECT_EQ(entries[1].value, Rational(-3, 4));
  std::ostringstream out;
  WriteGolden(out, entries);
  EXPECT_EQ(out.str(), "1/8  # diamond and:d=2\n-3/4  # shapka ds:n=3,d=3\n");
}

TEST(GoldenTest, RejectsMalformedLines) {
  for (const char* bad : {"1/8\n", "0.125  # diamond and:d=2\n",
                          "1/0  # diamond and:d=2\n", "1/8 # diamond\n"}) {
    std::istringstream in(bad);
    EXPECT_THROW(ReadGolden(in), ConfigError) << bad;
  }
}

}  // namespace
}  // namespace dsum
