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

#include "dsum/sampling.h"

#include <bit>
#include <cmath>
#include <string>

#include "dsum/errors.h"

namespace dsum {

GridPoint SampleUniformPoint(const GridDomain& domain, BitSource& src) {
  std::vector<int> coords(static_cast<std::size_t>(domain.dimension()));
  for (int i = 0; i < domain.dimension(); ++i) {
    coords[static_cast<std::size_t>(i)] = src.Uniform(domain.size(i));
  }
  return GridPoint(std::move(coords));
}

BitMask SampleMask(int d, BitSource& src) {
  BitMask m(d);
  for (int i = 0; i < d; ++i) m.Set(i, src.Bit());
  return m;
}

GridPoint NoiseSample(const GridDomain& domain, const GridPoint& x, double p,
                      BitSource& src) {
  domain.CheckPoint(x);
  if (!(p > -1.0 && p < 1.0)) {
    throw PreconditionError("noise correlation must lie in (-1, 1), got " +
                            std::to_string(p));
  }
  if (p < 0.0 && !domain.IsBinary()) {
    throw UnsupportedParameter(
        "negative correlation is only defined on binary domains");
  }
  GridPoint y = x;
  const double keep = std::abs(p);
  for (int i = 0; i < domain.dimension(); ++i) {
    if (src.Bernoulli(keep)) {
      if (p < 0.0) y[i] = 1 - x[i];
    } else {
      y[i] = src.Uniform(domain.size(i));
    }
  }
  return y;
}

GridPoint AgreementSample(const GridDomain& domain, const GridPoint& x,
                          double agreement, BitSource& src) {
  domain.CheckPoint(x);
  if (!(agreement >= 0.0 && agreement <= 1.0)) {
    throw PreconditionError("agreement probability must lie in [0, 1]");
  }
  GridPoint y = x;
  for (int i = 0; i < domain.dimension(); ++i) {
    if (src.Bernoulli(agreement)) continue;
    int v = src.Uniform(domain.size(i) - 1);
    if (v >= x[i]) ++v;
    y[i] = v;
  }
  return y;
}

double CorrelationForAgreement(double agreement, int n) {
  if (n < 2) throw PreconditionError("alphabet size must be at least 2");
  return (agreement * n - 1.0) / (n - 1.0);
}

RestrictionPattern RestrictionPattern::AllFree(int d) {
  return RestrictionPattern(std::vector<RestrictionAction>(
      static_cast<std::size_t>(d), RestrictionAction::kFree));
}

RestrictionPattern RestrictionPattern::FromIndex(std::uint64_t index, int d) {
  std::vector<RestrictionAction> actions(static_cast<std::size_t>(d));
  for (auto& a : actions) {
    a = static_cast<RestrictionAction>(index % 3);
    index /= 3;
  }
  return RestrictionPattern(std::move(actions));
}

int RestrictionPattern::FreeCount() const {
  int c = 0;
  for (auto a : actions_) c += a == RestrictionAction::kFree;
  return c;
}

Rational RestrictionPattern::Weight() const {
  const int free = FreeCount();
  const int fixed = dimension() - free;
  BigInt den = 1;
  den <<= static_cast<unsigned>(2 * fixed + free);
  return Rational(BigInt(1), den);
}

RestrictionPattern SampleRestriction(int d, BitSource& src) {
  std::vector<RestrictionAction> actions(static_cast<std::size_t>(d));
  for (auto& a : actions) {
    if (src.Bit()) {
      a = RestrictionAction::kFree;
    } else {
      a = src.Bit() ? RestrictionAction::kFixOne : RestrictionAction::kFixZero;
    }
  }
  return RestrictionPattern(std::move(actions));
}

std::string_view QueryPatternName(QueryPattern pattern) {
  switch (pattern) {
    case QueryPattern::kSquareInCube:
      return "square-in-cube";
    case QueryPattern::kDiamond:
      return "diamond";
    case QueryPattern::kDiamondInCube:
      return "diamond-in-cube";
  }
  return "?";
}

namespace {

void SampleSquareInCube(const GridDomain& domain, std::vector<GridPoint>& q,
                        BitSource& src) {
  for (int i = 0; i < domain.dimension(); ++i) {
    const int n = domain.size(i);
    const int a = src.Uniform(n);
    const bool x = src.Bit();
    const bool y = src.Bit();
    // b_i is read only by queries whose selector is 1 at i.
    const int b = (x || y) ? src.Uniform(n) : a;
    q[0][i] = a;
    q[1][i] = x ? b : a;
    q[2][i] = y ? b : a;
    q[3][i] = (x != y) ? b : a;
  }
}

void SampleDiamond(const GridDomain& domain, std::vector<GridPoint>& q,
                   BitSource& src) {
  for (int i = 0; i < domain.dimension(); ++i) {
    const int n = domain.size(i);
    const int a = src.Uniform(n);
    const int b = src.Uniform(n);
    // x_i only matters when a_i != b_i.
    const bool x = a != b ? src.Bit() : false;
    q[0][i] = a;
    q[1][i] = x ? b : a;
    q[2][i] = x ? a : b;
    q[3][i] = b;
  }
}

void SampleDiamondInCube(const GridDomain& domain, std::vector<GridPoint>& q,
                         BitSource& src) {
  for (int i = 0; i < domain.dimension(); ++i) {
    const int n = domain.size(i);
    const bool u = src.Bit();
    const bool v = src.Bit();
    const bool x = u != v ? src.Bit() : false;
    const bool s1 = u;
    const bool s2 = x ? v : u;
    const bool s3 = x ? u : v;
    const bool s4 = v;
    // The selectors at i are exactly {u, v}.
    const bool need_a = !u || !v;
    const bool need_b = u || v;
    const int a = need_a ? src.Uniform(n) : 0;
    const int b = need_b ? src.Uniform(n) : 0;
    q[0][i] = s1 ? b : a;
    q[1][i] = s2 ? b : a;
    q[2][i] = s3 ? b : a;
    q[3][i] = s4 ? b : a;
  }
}

}  // namespace

QuerySample SampleQueries(QueryPattern pattern, const GridDomain& domain,
                          BitSource& src) {
  const std::uint64_t start = src.bits_consumed();
  QuerySample s;
  s.points.assign(4, GridPoint(std::vector<int>(
                         static_cast<std::size_t>(domain.dimension()), 0)));
  switch (pattern) {
    case QueryPattern::kSquareInCube:
      SampleSquareInCube(domain, s.points, src);
      break;
    case QueryPattern::kDiamond:
      SampleDiamond(domain, s.points, src);
      break;
    case QueryPattern::kDiamondInCube:
      SampleDiamondInCube(domain, s.points, src);
      break;
  }
  s.bits = src.bits_consumed() - start;
  return s;
}

bool IsPowerOfTwo(int n) {
  return n > 0 && std::has_single_bit(static_cast<unsigned>(n));
}

int Log2Exact(int n) {
  if (!IsPowerOfTwo(n)) {
    throw UnsupportedParameter("bit accounting needs n a power of two, got " +
                               std::to_string(n));
  }
  return std::bit_width(static_cast<unsigned>(n)) - 1;
}

double ExpectedLazyBits(QueryPattern pattern, int n, int d) {
  const double lg = Log2Exact(n);
  switch (pattern) {
    case QueryPattern::kSquareInCube:
      return (2.0 + 1.75 * lg) * d;
    case QueryPattern::kDiamond:
      return (2.0 * lg + (1.0 - 1.0 / n)) * d;
    case QueryPattern::kDiamondInCube:
      return (2.5 + 1.5 * lg) * d;
  }
  return 0.0;
}

}  // namespace dsum
