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

#include "dsum/tuple_function.h"

#include "dsum/errors.h"

namespace dsum {

TupleFunction::TupleFunction(GridDomain domain,
                             std::vector<std::vector<int>> tables)
    : domain_(std::move(domain)), tables_(std::move(tables)) {
  if (static_cast<int>(tables_.size()) != domain_.dimension()) {
    throw PreconditionError("tuple function needs one table per coordinate");
  }
  for (int i = 0; i < domain_.dimension(); ++i) {
    if (static_cast<int>(tables_[static_cast<std::size_t>(i)].size()) !=
        domain_.size(i)) {
      throw PreconditionError("tuple table " + std::to_string(i) +
                              " has the wrong length");
    }
  }
}

TupleFunction TupleFunction::Constant(const GridDomain& domain,
                                      std::vector<int> values) {
  if (static_cast<int>(values.size()) != domain.dimension()) {
    throw PreconditionError("constant tuple has the wrong dimension");
  }
  std::vector<std::vector<int>> tables;
  for (int i = 0; i < domain.dimension(); ++i) {
    tables.emplace_back(static_cast<std::size_t>(domain.size(i)),
                        values[static_cast<std::size_t>(i)]);
  }
  return TupleFunction(domain, std::move(tables));
}

TupleFunction TupleFunction::WithOverride(const GridPoint& point,
                                          int coordinate, int value) const {
  domain_.CheckPoint(point);
  if (coordinate < 0 || coordinate >= domain_.dimension()) {
    throw PreconditionError("override coordinate out of range");
  }
  TupleFunction copy = *this;
  copy.overrides_[{point, coordinate}] = value;
  return copy;
}

int TupleFunction::EvalCoordinate(const GridPoint& p, int coordinate) const {
  if (!overrides_.empty()) {
    auto it = overrides_.find({p, coordinate});
    if (it != overrides_.end()) return it->second;
  }
  return tables_[static_cast<std::size_t>(coordinate)]
                [static_cast<std::size_t>(p[coordinate])];
}

std::vector<int> TupleFunction::Eval(const GridPoint& p) const {
  domain_.CheckPoint(p);
  std::vector<int> out(static_cast<std::size_t>(domain_.dimension()));
  for (int i = 0; i < domain_.dimension(); ++i) {
    out[static_cast<std::size_t>(i)] = EvalCoordinate(p, i);
  }
  return out;
}

}  // namespace dsum
