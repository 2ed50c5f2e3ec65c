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

#include "dsum/exact.h"

#include <bit>
#include <cmath>
#include <functional>
#include <sstream>

#include "dsum/errors.h"

namespace dsum {
namespace {

using Bytes = std::vector<std::uint8_t>;

// All points of a domain as coordinate rows, in table order.
class PointTable {
 public:
  explicit PointTable(const GridDomain& domain)
      : d_(domain.dimension()),
        count_(domain.CheckedPointCount()),
        coords_(count_ * static_cast<std::uint64_t>(d_)) {
    std::vector<int> p(static_cast<std::size_t>(d_), 0);
    for (std::uint64_t idx = 0; idx < count_; ++idx) {
      std::copy(p.begin(), p.end(), coords_.begin() + idx * d_);
      for (int i = d_ - 1; i >= 0; --i) {
        if (++p[i] < domain.size(i)) break;
        p[i] = 0;
      }
    }
    for (int i = 0; i < d_; ++i) {
      strides_.push_back(static_cast<std::int64_t>(domain.stride(i)));
    }
  }

  std::uint64_t count() const { return count_; }
  int coord(std::uint64_t idx, int i) const { return coords_[idx * d_ + i]; }
  std::int64_t stride(int i) const { return strides_[i]; }

  // out[x] = index of phi_x(a, b), bit i of x selecting b on coordinate i.
  void Subcube(std::uint64_t a, std::uint64_t b,
               std::vector<std::uint64_t>& out) const {
    const std::uint64_t size = std::uint64_t{1} << d_;
    out.resize(size);
    out[0] = a;
    for (std::uint64_t x = 1; x < size; ++x) {
      const int i = std::countr_zero(x);
      out[x] = out[x & (x - 1)] +
               static_cast<std::uint64_t>(stride(i) * (coord(b, i) - coord(a, i)));
    }
  }

 private:
  int d_;
  std::uint64_t count_;
  std::vector<int> coords_;
  std::vector<std::int64_t> strides_;
};

Bytes TableOf(const BooleanFunction& f) { return f.Tabulate().Unpack(); }

// sum over y_1..y_m of sum_x (D_{y_1} ... D_{y_m} g)(x), where
// D_y g(x) = g(x) + g(x + y).
std::uint64_t FlatCount(const Bytes& g, int m) {
  if (m == 0) {
    std::uint64_t c = 0;
    for (auto v : g) c += v;
    return c;
  }
  std::uint64_t total = 0;
  Bytes h(g.size());
  for (std::uint64_t y = 0; y < g.size(); ++y) {
    for (std::uint64_t x = 0; x < g.size(); ++x) h[x] = g[x] ^ g[x ^ y];
    total += FlatCount(h, m - 1);
  }
  return total;
}

BigInt Pow(std::uint64_t base, std::uint64_t exp) {
  return boost::multiprecision::pow(BigInt(base), static_cast<unsigned>(exp));
}

long double PairCount(const GridDomain& domain) {
  long double pts = 1;
  for (int s : domain.sizes()) pts *= s;
  return pts * pts;
}

BigInt PairCountExact(const GridDomain& domain) {
  BigInt pts = 1;
  for (int s : domain.sizes()) pts *= s;
  return pts * pts;
}

ExactValue Finish(const BigInt& hits, const BigInt& space,
                  const std::string& what) {
  std::ostringstream note;
  note << "enumeration of " << space << " outcomes (" << what << ")";
  return ExactValue{Rational(hits, space), note.str()};
}

}  // namespace

long double RandomnessSpaceSize(const TestSpec& spec,
                                const GridDomain& domain) {
  const int d = domain.dimension();
  const long double pairs = PairCount(domain);
  const long double cube = std::ldexp(1.0L, d);
  switch (spec.kind) {
    case TestKind::kBlrLinearity:
      return cube * cube;
    case TestKind::kBlrAffinity:
      return cube * cube * cube;
    case TestKind::kDiamond:
    case TestKind::kRhoDiamond:
      return pairs * cube;
    case TestKind::kSquareInCube:
      return pairs * cube * cube;
    case TestKind::kAffineOnSubcubeBlr:
    case TestKind::kAffineOnSubcubeDiamond:
    case TestKind::kDiamondInCube:
      return pairs * cube * cube * cube;
    case TestKind::kShapka:
      return pairs;
    case TestKind::kDegree:
      return pairs * std::ldexp(1.0L, (spec.degree + 2) * d);
  }
  return 0;
}

ExactValue ExactRejectionProbability(const TestSpec& spec,
                                     const BooleanFunction& f,
                                     std::uint64_t budget) {
  const GridDomain& domain = f.domain();
  ValidateTestDomain(spec, domain);
  const std::string name = spec.ToString();
  EnforceBudget(("exact " + name).c_str(), RandomnessSpaceSize(spec, domain),
                budget);
  const int d = domain.dimension();
  if (d > 24) throw BudgetExceeded("exact " + name, std::ldexp(1.0L, d), budget);
  const std::uint64_t cube = std::uint64_t{1} << d;
  const std::uint64_t full = cube - 1;
  const Bytes t = TableOf(f);

  // Tests on F_2^d itself; table indices XOR like points.
  if (spec.kind == TestKind::kBlrLinearity) {
    std::uint64_t hits = 0;
    for (std::uint64_t x = 0; x < cube; ++x) {
      for (std::uint64_t y = 0; y < cube; ++y) hits += t[x] ^ t[y] ^ t[x ^ y];
    }
    return Finish(hits, Pow(cube, 2), name);
  }
  if (spec.kind == TestKind::kBlrAffinity) {
    return Finish(FlatCount(t, 2), Pow(cube, 3), name);
  }

  const PointTable points(domain);
  const std::uint64_t count = points.count();
  std::vector<std::uint64_t> idx;
  Bytes g(cube);
  BigInt hits = 0;
  // rho-Diamond: rejections bucketed by the Hamming distance of (a, b).
  std::vector<std::uint64_t> by_distance(static_cast<std::size_t>(d) + 1, 0);

  for (std::uint64_t a = 0; a < count; ++a) {
    for (std::uint64_t b = 0; b < count; ++b) {
      points.Subcube(a, b, idx);
      for (std::uint64_t x = 0; x < cube; ++x) g[x] = t[idx[x]];
      std::uint64_t h = 0;
      switch (spec.kind) {
        case TestKind::kDiamond:
        case TestKind::kRhoDiamond:
          for (std::uint64_t x = 0; x < cube; ++x) {
            h += g[0] ^ g[full] ^ g[x] ^ g[full ^ x];
          }
          break;
        case TestKind::kSquareInCube:
          for (std::uint64_t x = 0; x < cube; ++x) {
            for (std::uint64_t y = 0; y < cube; ++y) {
              h += g[0] ^ g[x] ^ g[y] ^ g[x ^ y];
            }
          }
          break;
        case TestKind::kAffineOnSubcubeBlr:
          h = FlatCount(g, 2);
          break;
        case TestKind::kAffineOnSubcubeDiamond:
        case TestKind::kDiamondInCube:
          for (std::uint64_t u = 0; u < cube; ++u) {
            for (std::uint64_t v = 0; v < cube; ++v) {
              for (std::uint64_t x = 0; x < cube; ++x) {
                const std::uint64_t uv = (u & ~x) | (v & x);
                const std::uint64_t vu = (v & ~x) | (u & x);
                h += g[u] ^ g[uv] ^ g[vu] ^ g[v];
              }
            }
          }
          break;
        case TestKind::kShapka: {
          std::uint8_t s = t[b];
          for (int i = 0; i < d; ++i) s ^= g[std::uint64_t{1} << i];
          if (d % 2 == 0) s ^= t[a];
          h = s;
          break;
        }
        case TestKind::kDegree: {
          h = FlatCount(g, spec.degree + 1);
          break;
        }
        default:
          break;
      }
      if (spec.kind == TestKind::kRhoDiamond) {
        int dist = 0;
        for (int i = 0; i < d; ++i) dist += points.coord(a, i) != points.coord(b, i);
        by_distance[static_cast<std::size_t>(dist)] += h;
      } else {
        hits += h;
      }
    }
  }

  const BigInt pairs = PairCountExact(domain);
  switch (spec.kind) {
    case TestKind::kRhoDiamond: {
      const Rational same = (1 + spec.rho) / 2;
      const Rational diff = (1 - spec.rho) / 2;
      Rational value = 0;
      for (int k = 0; k <= d; ++k) {
        value += Rational(BigInt(by_distance[static_cast<std::size_t>(k)])) *
                 Power(same, static_cast<unsigned>(d - k)) *
                 Power(diff, static_cast<unsigned>(k));
      }
      value /= Rational(Pow(4, static_cast<std::uint64_t>(d)));
      return ExactValue{value, "weighted enumeration of " +
                                   std::to_string(count * count * cube) +
                                   " outcomes (" + name + ")"};
    }
    case TestKind::kDiamond:
      return Finish(hits, pairs * cube, name);
    case TestKind::kSquareInCube:
      return Finish(hits, pairs * cube * cube, name);
    case TestKind::kAffineOnSubcubeBlr:
    case TestKind::kAffineOnSubcubeDiamond:
    case TestKind::kDiamondInCube:
      return Finish(hits, pairs * Pow(cube, 3), name);
    case TestKind::kShapka:
      return Finish(hits, pairs, name);
    case TestKind::kDegree:
      return Finish(hits, pairs * Pow(cube, static_cast<std::uint64_t>(spec.degree) + 2), name);
    default:
      break;
  }
  throw PreconditionError("unhandled test kind");
}

ExactValue ExactDiamond4Rejection(const BooleanFunction& f,
                                  const BooleanFunction& g,
                                  const BooleanFunction& h,
                                  const BooleanFunction& k,
                                  std::uint64_t budget) {
  const GridDomain& domain = f.domain();
  if (!(domain == g.domain() && domain == h.domain() && domain == k.domain())) {
    throw PreconditionError("4-function Diamond needs a shared domain");
  }
  const int d = domain.dimension();
  EnforceBudget("exact diamond4", PairCount(domain) * std::ldexp(1.0L, d),
                budget);
  const std::uint64_t cube = std::uint64_t{1} << d;
  const Bytes tf = TableOf(f), tg = TableOf(g), th = TableOf(h), tk = TableOf(k);
  const PointTable points(domain);
  std::vector<std::uint64_t> idx;
  std::uint64_t hits = 0;
  for (std::uint64_t a = 0; a < points.count(); ++a) {
    for (std::uint64_t b = 0; b < points.count(); ++b) {
      points.Subcube(a, b, idx);
      for (std::uint64_t x = 0; x < cube; ++x) {
        hits += tf[a] ^ tg[idx[x]] ^ th[idx[(cube - 1) ^ x]] ^ tk[b];
      }
    }
  }
  return Finish(hits, PairCountExact(domain) * cube, "diamond4");
}

ExactValue ExactDirectProductRejection(const TupleFunction& f,
                                       std::uint64_t budget) {
  const GridDomain& domain = f.domain();
  const int d = domain.dimension();
  EnforceBudget("exact direct product",
                PairCount(domain) * std::ldexp(1.0L, d), budget);
  const PointTable points(domain);
  const std::uint64_t count = points.count();
  std::vector<GridPoint> pts;
  pts.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) pts.push_back(domain.PointAt(i));
  // Pr[x, A, y] = (1/N) (3/4)^|A| (1/4)^{d-|A|} n^{-(d-|A|)} on uniform
  // grids; in general the free coordinates contribute 1/n_i each.
  Rational total = 0;
  for (std::uint64_t x = 0; x < count; ++x) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << d); ++mask) {
      Rational weight(1);
      for (int i = 0; i < d; ++i) {
        weight *= ((mask >> i) & 1u) ? Rational(3, 4)
                                     : Rational(1, 4 * domain.size(i));
      }
      std::uint64_t rejected = 0;
      for (std::uint64_t y = 0; y < count; ++y) {
        bool agrees = true;
        bool reject = false;
        for (int i = 0; i < d && agrees; ++i) {
          if (!((mask >> i) & 1u)) continue;
          if (points.coord(x, i) != points.coord(y, i)) {
            agrees = false;
          } else if (f.EvalCoordinate(pts[x], i) != f.EvalCoordinate(pts[y], i)) {
            reject = true;
          }
        }
        if (agrees && reject) ++rejected;
      }
      total += weight * Rational(BigInt(rejected));
    }
  }
  total /= Rational(BigInt(count));
  return ExactValue{total, "weighted enumeration over (x, A, y) (direct product)"};
}

}  // namespace dsum
