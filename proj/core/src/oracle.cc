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

#include <algorithm>

#include "dsum/errors.h"

namespace dsum {

std::optional<GridPoint> ForcedFourthQuery(const GridPoint& q1,
                                           const GridPoint& q2,
                                           const GridPoint& q3) {
  if (q1.dimension() != q2.dimension() || q1.dimension() != q3.dimension()) {
    return std::nullopt;
  }
  GridPoint out = q1;
  for (int i = 0; i < q1.dimension(); ++i) {
    const int a = q1[i], b = q2[i], c = q3[i];
    if (a == b) {
      out[i] = c;
    } else if (a == c) {
      out[i] = b;
    } else if (b == c) {
      out[i] = a;
    } else {
      return std::nullopt;
    }
  }
  return out;
}

std::vector<GridPoint> AnticipateFourthStrategy::ChooseErasures(
    std::span<const GridPoint> transcript, const GridDomain& domain,
    int budget) const {
  if (budget < 1 || transcript.size() != 3) return {};
  auto fourth = ForcedFourthQuery(transcript[0], transcript[1], transcript[2]);
  if (!fourth || !domain.Contains(*fourth)) return {};
  return {*fourth};
}

OracleHandle::OracleHandle(BooleanFunction f) : function_(std::move(f)) {}

OracleHandle::OracleHandle(BooleanFunction f, int erasures_per_query,
                           std::shared_ptr<const ErasureStrategy> strategy)
    : function_(std::move(f)),
      erasures_per_query_(erasures_per_query),
      strategy_(std::move(strategy)) {
  if (erasures_per_query_ < 0) {
    throw PreconditionError("erasure budget must be non-negative");
  }
  if (erasures_per_query_ > 0 && !strategy_) {
    throw PreconditionError("a positive erasure budget needs a strategy");
  }
}

Answer OracleHandle::Query(const GridPoint& p) {
  function_.domain().CheckPoint(p);
  ++query_count_;
  transcript_.push_back(p);
  Answer answer;
  if (!erased_.contains(p)) answer = function_.EvaluateUnchecked(p);
  if (strategy_ && erasures_per_query_ > 0) {
    auto chosen = strategy_->ChooseErasures(transcript_, function_.domain(),
                                            erasures_per_query_);
    const std::size_t take = std::min<std::size_t>(
        chosen.size(), static_cast<std::size_t>(erasures_per_query_));
    for (std::size_t i = 0; i < take; ++i) {
      function_.domain().CheckPoint(chosen[i]);
      erased_.insert(std::move(chosen[i]));
    }
  }
  return answer;
}

OracleHandle ErasureWrap(BooleanFunction f, int t,
                         std::shared_ptr<const ErasureStrategy> strategy) {
  return OracleHandle(std::move(f), t, std::move(strategy));
}

}  // namespace dsum
