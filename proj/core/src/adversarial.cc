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

#include "dsum/adversarial.h"

#include <bit>
#include <cmath>
#include <numeric>

#include "dsum/errors.h"

namespace dsum {

AdversarialInstance InformationLimitInstance(const GridDomain& domain,
                                             BitSource& src) {
  if (!domain.IsUniform() || domain.UniformSize() % 2 != 0 ||
      domain.dimension() < 2) {
    throw PreconditionError(
        "information-limit instance needs an even uniform n and d >= 2");
  }
  const int d = domain.dimension();
  const std::uint64_t count = domain.CheckedPointCount();
  // Points with x_d = 0, in table order.
  std::vector<std::uint64_t> slice;
  for (std::uint64_t idx = 0; idx < count; idx += domain.size(d - 1)) {
    slice.push_back(idx);
  }
  // Uniform half via a partial Fisher-Yates shuffle.
  const std::size_t half = slice.size() / 2;
  TruthTable table(count);
  for (std::size_t i = 0; i < half; ++i) {
    const std::size_t left = slice.size() - i;
    std::size_t j = i;
    if (left > 1) {
      const int width = std::bit_width(left - 1);
      for (;;) {
        const std::uint64_t v = src.Bits(width);
        if (v < left) {
          j = i + static_cast<std::size_t>(v);
          break;
        }
      }
    }
    std::swap(slice[i], slice[j]);
    table.Set(slice[i], true);
  }

  DirectSum zero = DirectSum::Zero(domain);
  std::vector<DirectSum::Table> tables = zero.tables();
  tables[static_cast<std::size_t>(d - 1)][0] = 1;
  return AdversarialInstance{
      BooleanFunction::FromTable(domain, std::move(table)),
      {std::move(zero), DirectSum(domain, std::move(tables))},
      Rational(0)};
}

bool IsHeavy(const GridPoint& p, int n) {
  int zeros = 0;
  for (int c : p.coords()) zeros += (c == 0);
  return zeros * n > 2 * p.dimension();
}

Rational HeavyFraction(int n, int d) {
  if (n < 2 || d < 1) throw PreconditionError("need n >= 2 and d >= 1");
  // sum_{k n > 2d} C(d, k) (n - 1)^{d - k} / n^d
  BigInt total = 0;
  BigInt binom = 1;
  for (int k = 0; k <= d; ++k) {
    if (k > 0) binom = binom * (d - k + 1) / k;
    if (k * n > 2 * d) total += binom * boost::multiprecision::pow(BigInt(n - 1), d - k);
  }
  return Rational(total, boost::multiprecision::pow(BigInt(n), d));
}

AdversarialInstance QueryLimitInstance(const GridDomain& domain,
                                       double epsilon, BitSource& src) {
  if (!domain.IsUniform() || domain.UniformSize() % 4 != 0) {
    throw PreconditionError("query-limit instance needs n divisible by 4");
  }
  const int n = domain.UniformSize();
  const int d = domain.dimension();
  if (!(std::pow(0.7, static_cast<double>(d) / n) < epsilon)) {
    throw PreconditionError("query-limit instance needs 0.7^(d/n) < epsilon");
  }
  DirectSum planted = DirectSum::Random(domain, src);
  BooleanFunction f = BooleanFunction::FromPredicate(
      domain,
      [planted, n](const GridPoint& p) {
        return planted.Evaluate(p) != IsHeavy(p, n);
      },
      "querylb[" + planted.ToString() + "]");
  return AdversarialInstance{std::move(f), {std::move(planted)},
                             HeavyFraction(n, d)};
}

}  // namespace dsum
