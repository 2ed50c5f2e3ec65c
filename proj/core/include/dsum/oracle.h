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

#ifndef DSUM_ORACLE_H_
#define DSUM_ORACLE_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include "dsum/boolean_function.h"
#include "dsum/grid.h"

namespace dsum {

// Answer to a query; nullopt means the entry was erased (Void).
using Answer = std::optional<bool>;

// Online erasure adversary: after every answered query it may erase up to
// `budget` points of the function.
class ErasureStrategy {
 public:
  virtual ~ErasureStrategy() = default;
  virtual std::string name() const = 0;
  // `transcript` holds the queries of the current run, in issue order.
  virtual std::vector<GridPoint> ChooseErasures(
      std::span<const GridPoint> transcript, const GridDomain& domain,
      int budget) const = 0;
};

// Erases the fourth query of a 4-query test as soon as three queries are
// known. Works for every test whose four queries pair up coordinate by
// coordinate (Diamond, Square-in-Cube, Diamond-in-Cube, BLR-affinity over
// F_2^d): in each coordinate the fourth value is the one that occurs an odd
// number of times among the first three.
class AnticipateFourthStrategy : public ErasureStrategy {
 public:
  std::string name() const override { return "anticipate-fourth"; }
  std::vector<GridPoint> ChooseErasures(std::span<const GridPoint> transcript,
                                        const GridDomain& domain,
                                        int budget) const override;
};

// The point forced by three queries of a paired 4-query test, if any
// coordinate holds three distinct values the transcript is not of that shape.
std::optional<GridPoint> ForcedFourthQuery(const GridPoint& q1,
                                           const GridPoint& q2,
                                           const GridPoint& q3);

// Query access to a function with a counter, a per-run transcript and an
// optional erasure adversary. Single-threaded.
class OracleHandle {
 public:
  explicit OracleHandle(BooleanFunction f);
  OracleHandle(BooleanFunction f, int erasures_per_query,
               std::shared_ptr<const ErasureStrategy> strategy);

  // Counts the query, records it, answers (nullopt if erased), then lets the
  // adversary erase. Throws PreconditionError outside the domain.
  Answer Query(const GridPoint& p);

  // Starts a new transcript. Erased points stay erased.
  void BeginRun() { transcript_.clear(); }

  std::uint64_t query_count() const { return query_count_; }
  std::span<const GridPoint> transcript() const { return transcript_; }
  bool IsErased(const GridPoint& p) const { return erased_.contains(p); }
  std::size_t erased_count() const { return erased_.size(); }

  const GridDomain& domain() const { return function_.domain(); }
  const BooleanFunction& function() const { return function_; }

 private:
  BooleanFunction function_;
  int erasures_per_query_ = 0;
  std::shared_ptr<const ErasureStrategy> strategy_;
  std::unordered_set<GridPoint, GridPointHash> erased_;
  std::vector<GridPoint> transcript_;
  std::uint64_t query_count_ = 0;
};

OracleHandle ErasureWrap(BooleanFunction f, int t,
                         std::shared_ptr<const ErasureStrategy> strategy);

}  // namespace dsum

#endif  // DSUM_ORACLE_H_
