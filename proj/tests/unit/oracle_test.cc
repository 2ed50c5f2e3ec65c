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

#include "dsum/oracle.h"

#include <gtest/gtest.h>

#include "dsum/errors.h"

namespace dsum {
namespace {

TEST(ForcedFourthQueryTest, OddOneOutPerCoordinate) {
  const auto q = ForcedFourthQuery(GridPoint({0, 1, 2}), GridPoint({0, 2, 2}),
                                   GridPoint({3, 1, 1}));
  ASSERT_TRUE(q.has_value());
  EXPECT_EQ(*q, GridPoint({3, 2, 1}));
  EXPECT_FALSE(ForcedFourthQuery(GridPoint({0}), GridPoint({1}), GridPoint({2})));
}

TEST(OracleHandleTest, CountsAndRecords) {
  OracleHandle o(And(2));
  EXPECT_EQ(o.Query(GridPoint({1, 1})), Answer(true));
  EXPECT_EQ(o.Query(GridPoint({0, 1})), Answer(false));
  EXPECT_EQ(o.query_count(), 2u);
  EXPECT_EQ(o.transcript().size(), 2u);
  o.BeginRun();
  EXPECT_TRUE(o.transcript().empty());
  EXPECT_EQ(o.query_count(), 2u);
  EXPECT_THROW(o.Query(GridPoint({2, 0})), PreconditionError);
}

TEST(OracleHandleTest, AnticipateFourthErasesTheForcedPoint) {
  OracleHandle o = ErasureWrap(And(2), 1,
                               std::make_shared<AnticipateFourthStrategy>());
  EXPECT_TRUE(o.Query(GridPoint({0, 0})).has_value());
  EXPECT_TRUE(o.Query(GridPoint({0, 1})).has_value());
  EXPECT_TRUE(o.Query(GridPoint({1, 0})).has_value());
  EXPECT_TRUE(o.IsErased(GridPoint({1, 1})));
  EXPECT_EQ(o.Query(GridPoint({1, 1})), std::nullopt);
  EXPECT_EQ(o.erased_count(), 1u);
  // Erasures persist across runs.
  o.BeginRun();
  EXPECT_EQ(o.Query(GridPoint({1, 1})), std::nullopt);
}

TEST(OracleHandleTest, RejectsInconsistentErasureConfig) {
  EXPECT_THROW(OracleHandle(And(2), -1, nullptr), PreconditionError);
  EXPECT_THROW(OracleHandle(And(2), 1, nullptr), PreconditionError);
}

}  // namespace
}  // namespace dsum
