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

#ifndef DSUM_DISTANCE_H_
#define DSUM_DISTANCE_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "dsum/boolean_function.h"
#include "dsum/direct_sum.h"
#include "dsum/rational.h"

namespace dsum {

struct DirectSumDistance {
  ExactValue distance;
  DirectSum witness;
  // Every canonical direct sum at the minimum distance (witness included).
  std::vector<DirectSum> minimizers;
};

// Minimum over all 2^{d(n-1)+1} canonical direct sums; `budget` bounds
// candidates times points.
DirectSumDistance DistToDirectSum(
    const BooleanFunction& f, std::uint64_t budget = kDefaultEnumerationBudget);

// Binary-domain shortcut through the spectrum: (1 - max_S |fhat(S)|) / 2.
ExactValue DistToDirectSumSpectral(const BooleanFunction& f);

// A polynomial over F_2 in d variables with 0/1 exponents. Monomials are
// variable masks (bit i = x_i); the empty mask is the constant 1.
class F2Polynomial {
 public:
  F2Polynomial(int d, std::vector<std::uint32_t> monomials);

  int dimension() const { return d_; }
  const std::vector<std::uint32_t>& monomials() const { return monomials_; }
  bool IsZero() const { return monomials_.empty(); }
  int Degree() const;
  bool Evaluate(std::uint32_t point) const;
  std::string ToString() const;

 private:
  int d_;
  std::vector<std::uint32_t> monomials_;  // sorted, distinct
};

// All monomial masks of degree <= k in d variables, by degree then value.
std::vector<std::uint32_t> MonomialsUpToDegree(int d, int k);

// Minimum distance to a polynomial of degree <= k, enumerating all
// 2^{sum_{i<=k} C(d,i)} of them. Binary domains only.
ExactValue DistToJuntaDegree(const BooleanFunction& f, int k,
                             std::uint64_t budget = kDefaultEnumerationBudget);

// Pr_{x ~ D}[p(x) != 0] where the x_i are independent with Pr[x_i = 1] =
// marginals[i]. Every marginal must lie in [1/10, 9/10]; the zero
// polynomial is rejected.
ExactValue BiasedNonzeroWeight(const F2Polynomial& p,
                               std::span<const Rational> marginals);

}  // namespace dsum

#endif  // DSUM_DISTANCE_H_
