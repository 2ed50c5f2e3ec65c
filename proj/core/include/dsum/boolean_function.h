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

// Functions [n_1] x ... x [n_d] -> F_2 with interchangeable backings, plus
// the named families, corruption channels and exact distance.

#ifndef DSUM_BOOLEAN_FUNCTION_H_
#define DSUM_BOOLEAN_FUNCTION_H_

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "dsum/bit_source.h"
#include "dsum/direct_sum.h"
#include "dsum/grid.h"
#include "dsum/rational.h"
#include "dsum/sampling.h"
#include "dsum/truth_table.h"

namespace dsum {

class FunctionBackend {
 public:
  virtual ~FunctionBackend() = default;
  // `p` has already been checked against the domain.
  virtual bool Evaluate(const GridPoint& p) const = 0;
  virtual std::string Describe() const = 0;
  // Non-null when the backing is a plain table over the whole domain.
  virtual const TruthTable* table() const { return nullptr; }
  virtual const DirectSum* direct_sum() const { return nullptr; }
};

// Immutable, cheap to copy, safe to share between threads.
class BooleanFunction {
 public:
  BooleanFunction(GridDomain domain,
                  std::shared_ptr<const FunctionBackend> backend);

  // Row-major table, last coordinate fastest; size must equal the point count.
  static BooleanFunction FromTable(GridDomain domain, TruthTable table);
  static BooleanFunction FromDirectSum(DirectSum sum);
  static BooleanFunction FromPredicate(GridDomain domain,
                                       std::function<bool(const GridPoint&)> f,
                                       std::string description);

  const GridDomain& domain() const { return domain_; }

  // Throws PreconditionError for a point outside the domain.
  bool Eval(const GridPoint& p) const;
  bool operator()(const GridPoint& p) const { return Eval(p); }
  // No range check.
  bool EvaluateUnchecked(const GridPoint& p) const {
    return backend_->Evaluate(p);
  }

  // Full table; throws BudgetExceeded if the domain has more than `budget`
  // points.
  TruthTable Tabulate(std::uint64_t budget = kDefaultEnumerationBudget) const;

  const DirectSum* direct_sum() const { return backend_->direct_sum(); }
  std::string Describe() const { return backend_->Describe(); }

 private:
  GridDomain domain_;
  std::shared_ptr<const FunctionBackend> backend_;
};

// Named families. Majority needs n = 2 and odd d; `and` needs n = 2.
BooleanFunction Majority(int d);
BooleanFunction And(int d);
// sum_i x_i mod 2; a direct sum on any grid.
BooleanFunction Parity(const GridDomain& domain);
BooleanFunction Constant(const GridDomain& domain, bool value);
// x_i mod 2 for a 0-based coordinate i.
BooleanFunction Dictator(const GridDomain& domain, int coordinate);
// Seed-deterministic uniformly random table.
BooleanFunction RandomFunction(const GridDomain& domain, std::uint64_t seed,
                               std::uint64_t budget = kDefaultEnumerationBudget);

// Exact Pr_x[f(x) != g(x)] by enumeration.
Rational DistExact(const BooleanFunction& f, const BooleanFunction& g,
                   std::uint64_t budget = kDefaultEnumerationBudget);

struct Corruption {
  BooleanFunction function;
  // Indices (row-major) of the flipped points, ascending.
  std::vector<std::uint64_t> flipped;
  Rational realized_fraction;
};

// Flips each point independently with probability `rate`.
Corruption CorruptAtRate(const BooleanFunction& f, double rate, BitSource& src,
                         std::uint64_t budget = kDefaultEnumerationBudget);
// Flips exactly floor(fraction * N) distinct points chosen uniformly.
Corruption CorruptExactFraction(
    const BooleanFunction& f, const Rational& fraction, BitSource& src,
    std::uint64_t budget = kDefaultEnumerationBudget);
// Flips exactly the given points.
Corruption CorruptPoints(const BooleanFunction& f,
                         std::span<const GridPoint> points,
                         std::uint64_t budget = kDefaultEnumerationBudget);

// f restricted by `pattern`: a function of the free coordinates, in their
// original order. Fixing every coordinate gives a 0-dimensional constant.
// Binary domains only.
BooleanFunction ApplyRestriction(const BooleanFunction& f,
                                 const RestrictionPattern& pattern);

}  // namespace dsum

#endif  // DSUM_BOOLEAN_FUNCTION_H_
