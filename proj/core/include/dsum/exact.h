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

// Exact rejection probabilities by full enumeration of each tester's
// randomness. These are the reference values every Monte Carlo estimate is
// checked against, so they share no sampling code with the testers.

#ifndef DSUM_EXACT_H_
#define DSUM_EXACT_H_

#include <cstdint>

#include "dsum/boolean_function.h"
#include "dsum/rational.h"
#include "dsum/testers.h"
#include "dsum/tuple_function.h"

namespace dsum {

// Size of the randomness space enumerated for `spec` on `domain`, e.g.
// n^{2d} 2^d for the Diamond test and n^{2d} 2^{(k+2)d} for degree k.
long double RandomnessSpaceSize(const TestSpec& spec, const GridDomain& domain);

// Pr[reject]. Refuses with BudgetExceeded when the randomness space is
// larger than `budget`.
ExactValue ExactRejectionProbability(
    const TestSpec& spec, const BooleanFunction& f,
    std::uint64_t budget = kDefaultEnumerationBudget);

ExactValue ExactDiamond4Rejection(
    const BooleanFunction& f, const BooleanFunction& g,
    const BooleanFunction& h, const BooleanFunction& k,
    std::uint64_t budget = kDefaultEnumerationBudget);

ExactValue ExactDirectProductRejection(
    const TupleFunction& f, std::uint64_t budget = kDefaultEnumerationBudget);

}  // namespace dsum

#endif  // DSUM_EXACT_H_
