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

#ifndef DSUM_DIRECT_SUM_H_
#define DSUM_DIRECT_SUM_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dsum/bit_source.h"
#include "dsum/grid.h"

namespace dsum {

// f(x) = L_1(x_1) + ... + L_d(x_d) over F_2.
//
// Stored gauge-fixed: tables[i][0] == 0 for every i >= 1, with the constant
// term absorbed into tables[0]. Two direct sums evaluate identically iff
// their canonical tables are equal.
class DirectSum {
 public:
  using Table = std::vector<std::uint8_t>;

  // Table i must have length n_i with entries in {0, 1}. The input need not
  // be canonical.
  DirectSum(GridDomain domain, std::vector<Table> tables);

  static DirectSum Zero(const GridDomain& domain);
  static DirectSum Random(const GridDomain& domain, BitSource& src);

  // Number of canonical forms: 2^{n_1 + sum_{i>=2} (n_i - 1)}, i.e.
  // 2^{d(n-1)+1} on uniform grids. nullopt if that exceeds 2^63.
  static std::optional<std::uint64_t> CanonicalCount(const GridDomain& domain);
  // Canonical form number `index`: the low n_1 bits give tables[0], then
  // n_i - 1 bits for entries 1..n_i-1 of each later table.
  static DirectSum FromCanonicalIndex(const GridDomain& domain,
                                      std::uint64_t index);

  const GridDomain& domain() const { return domain_; }
  const std::vector<Table>& tables() const { return tables_; }

  // Unchecked; callers validate the point.
  bool Evaluate(const GridPoint& p) const;
  // Throws PreconditionError on a point outside the domain.
  bool Eval(const GridPoint& p) const;

  std::string ToString() const;

  bool operator==(const DirectSum& other) const = default;

 private:
  void Canonicalize();

  GridDomain domain_;
  std::vector<Table> tables_;
};

}  // namespace dsum

#endif  // DSUM_DIRECT_SUM_H_
