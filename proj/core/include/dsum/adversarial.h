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

// Instance generators for the two decoding lower bounds.

#ifndef DSUM_ADVERSARIAL_H_
#define DSUM_ADVERSARIAL_H_

#include <vector>

#include "dsum/bit_source.h"
#include "dsum/boolean_function.h"
#include "dsum/direct_sum.h"
#include "dsum/rational.h"

namespace dsum {

struct AdversarialInstance {
  BooleanFunction function;
  // Information limit: {Z, L}, the two equidistant direct sums.
  // Query limit: {L}, the planted direct sum.
  std::vector<DirectSum> witnesses;
  // Query limit only: exact fraction of heavy points.
  Rational heavy_fraction;
};

// Needs an even uniform n and d >= 2. Z is the zero function and L the
// indicator of x_d = 0; f is zero off {x_d = 0} and one on a uniformly random
// half of {x_d = 0}, so dist(f, Z) = dist(f, L) = 1/(2n).
AdversarialInstance InformationLimitInstance(const GridDomain& domain,
                                             BitSource& src);

// A point is heavy if more than 2d/n of its coordinates equal 0.
bool IsHeavy(const GridPoint& p, int n);
// Exact Pr_x[x heavy] for uniform x in [n]^d, from the binomial law.
Rational HeavyFraction(int n, int d);

// Needs n divisible by 4 and 0.7^{d/n} < epsilon. Plants a random direct sum
// L and flips it on every heavy point. Evaluated lazily, so d can be large.
AdversarialInstance QueryLimitInstance(const GridDomain& domain,
                                       double epsilon, BitSource& src);

}  // namespace dsum

#endif  // DSUM_ADVERSARIAL_H_
