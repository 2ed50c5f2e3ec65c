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

// Correlated sampling on grids: uniform points, the noise operator, random
// restriction patterns, and the lazy query samplers whose randomness cost is
// tracked bit by bit.

#ifndef DSUM_SAMPLING_H_
#define DSUM_SAMPLING_H_

#include <cstdint>
#include <string_view>
#include <vector>

#include "dsum/bit_source.h"
#include "dsum/grid.h"
#include "dsum/rational.h"

namespace dsum {

GridPoint SampleUniformPoint(const GridDomain& domain, BitSource& src);
BitMask SampleMask(int d, BitSource& src);

// y ~ T_p(x). For p >= 0 each coordinate is kept with probability p and
// resampled uniformly otherwise. For p < 0 (binary domains only) each
// coordinate is flipped with probability |p| and resampled otherwise.
// p must lie in the open interval (-1, 1).
GridPoint NoiseSample(const GridDomain& domain, const GridPoint& x, double p,
                      BitSource& src);

// Keeps each coordinate with probability `agreement` and otherwise draws it
// uniformly from the alphabet minus x_i. Matches T_p with
// p = CorrelationForAgreement(agreement, n) coordinate by coordinate.
GridPoint AgreementSample(const GridDomain& domain, const GridPoint& x,
                          double agreement, BitSource& src);

// The correlation p for which T_p keeps a coordinate equal with probability
// `agreement` on an alphabet of size n: (agreement * n - 1) / (n - 1).
double CorrelationForAgreement(double agreement, int n);

enum class RestrictionAction : std::uint8_t { kFixZero, kFixOne, kFree };

// Per-coordinate restriction of a function on F_2^d. A sampled pattern fixes
// a coordinate to 0 or 1 with probability 1/4 each and leaves it free with
// probability 1/2.
class RestrictionPattern {
 public:
  RestrictionPattern() = default;
  explicit RestrictionPattern(std::vector<RestrictionAction> actions)
      : actions_(std::move(actions)) {}

  static RestrictionPattern AllFree(int d);

  // Pattern number `index` in base-3 order (coordinate 0 least significant;
  // digit 0 = fix 0, 1 = fix 1, 2 = free). There are 3^d patterns.
  static RestrictionPattern FromIndex(std::uint64_t index, int d);

  int dimension() const { return static_cast<int>(actions_.size()); }
  RestrictionAction operator[](int i) const {
    return actions_[static_cast<std::size_t>(i)];
  }
  int FreeCount() const;
  // (1/4)^{#fixed} * (1/2)^{#free}.
  Rational Weight() const;

  bool operator==(const RestrictionPattern&) const = default;

 private:
  std::vector<RestrictionAction> actions_;
};

RestrictionPattern SampleRestriction(int d, BitSource& src);

// Query tuples of the 4-query testers, drawn lazily so that no coordinate of
// a or b is sampled unless some query reads it.
enum class QueryPattern { kSquareInCube, kDiamond, kDiamondInCube };

std::string_view QueryPatternName(QueryPattern pattern);

struct QuerySample {
  // Issue order:
  //   square-in-cube  a, phi_x(a,b), phi_y(a,b), phi_{x+y}(a,b)
  //   diamond         a, phi_x(a,b), phi_x(b,a), b
  //   diamond-in-cube g(u), g(phi_x(u,v)), g(phi_x(v,u)), g(v)
  //                   where g(s) = phi_s(a,b)
  // A tester accepts iff the four answers sum to 0 over F_2.
  std::vector<GridPoint> points;
  std::uint64_t bits = 0;
};

// Plain sampling works on any domain. The bit counts match the closed forms
// of ExpectedLazyBits only when the alphabet is uniform with n a power of two.
QuerySample SampleQueries(QueryPattern pattern, const GridDomain& domain,
                          BitSource& src);

// Expected bits per sample:
//   square-in-cube  (2 + 1.75 log2 n) d
//   diamond         (2 log2 n + (1 - 1/n)) d
//   diamond-in-cube (2.5 + 1.5 log2 n) d
// Throws UnsupportedParameter unless n is a power of two.
double ExpectedLazyBits(QueryPattern pattern, int n, int d);

bool IsPowerOfTwo(int n);
int Log2Exact(int n);

}  // namespace dsum

#endif  // DSUM_SAMPLING_H_
