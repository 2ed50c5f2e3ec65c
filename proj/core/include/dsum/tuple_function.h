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

#ifndef DSUM_TUPLE_FUNCTION_H_
#define DSUM_TUPLE_FUNCTION_H_

#include <map>
#include <utility>
#include <vector>

#include "dsum/grid.h"

namespace dsum {

// A vector-valued function F: [n]^d -> Z^d, the input of the direct product
// test. Built from per-coordinate tables (a true direct product
// (G_1(x_1), ..., G_d(x_d))) with optional per-point overrides.
class TupleFunction {
 public:
  // tables[i] has length n_i.
  TupleFunction(GridDomain domain, std::vector<std::vector<int>> tables);

  static TupleFunction Constant(const GridDomain& domain,
                                std::vector<int> values);

  // Returns a copy whose entry `coordinate` at `point` reads `value`.
  TupleFunction WithOverride(const GridPoint& point, int coordinate,
                             int value) const;

  const GridDomain& domain() const { return domain_; }
  std::vector<int> Eval(const GridPoint& p) const;
  int EvalCoordinate(const GridPoint& p, int coordinate) const;

 private:
  GridDomain domain_;
  std::vector<std::vector<int>> tables_;
  std::map<std::pair<GridPoint, int>, int> overrides_;
};

}  // namespace dsum

#endif  // DSUM_TUPLE_FUNCTION_H_
