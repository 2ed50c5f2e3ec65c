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

#include "dsum/fourier.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

#include "dsum/errors.h"

namespace dsum {
namespace {

void RequireBinary(const GridDomain& domain, const char* what) {
  if (!domain.IsBinary()) {
    throw UnsupportedParameter(std::string(what) + " needs n = 2");
  }
}

// Table index bit (d - 1 - i) holds coordinate i; subset masks use bit i.
std::uint64_t IndexToMask(std::uint64_t index, int d) {
  std::uint64_t mask = 0;
  for (int i = 0; i < d; ++i) {
    if ((index >> (d - 1 - i)) & 1u) mask |= std::uint64_t{1} << i;
  }
  return mask;
}

}  // namespace

Spectrum::Spectrum(int d, std::vector<std::int64_t> numerators)
    : d_(d), numerators_(std::move(numerators)) {
  if (d < 0 || d > 40 || numerators_.size() != (std::uint64_t{1} << d)) {
    throw PreconditionError("spectrum needs 2^d coefficients");
  }
}

Rational Spectrum::Coefficient(std::uint64_t subset) const {
  return Rational(BigInt(numerators_.at(subset)), BigInt(denominator()));
}

Rational Spectrum::MaxAbsCoefficient() const {
  return Rational(BigInt(std::llabs(numerators_[ArgMaxAbs()])),
                  BigInt(denominator()));
}

std::uint64_t Spectrum::ArgMaxAbs() const {
  std::uint64_t best = 0;
  for (std::uint64_t s = 1; s < numerators_.size(); ++s) {
    if (std::llabs(numerators_[s]) > std::llabs(numerators_[best])) best = s;
  }
  return best;
}

Rational Spectrum::SumOfSquares() const {
  BigInt total = 0;
  for (std::int64_t c : numerators_) total += BigInt(c) * c;
  const BigInt den = BigInt(denominator()) * denominator();
  return Rational(total, den);
}

Rational Spectrum::NoiseStability(const Rational& rho) const {
  // Group by |S| so each power of rho is formed once.
  std::vector<BigInt> by_weight(static_cast<std::size_t>(d_) + 1, 0);
  for (std::uint64_t s = 0; s < numerators_.size(); ++s) {
    by_weight[static_cast<std::size_t>(std::popcount(s))] +=
        BigInt(numerators_[s]) * numerators_[s];
  }
  Rational total = 0;
  for (int w = 0; w <= d_; ++w) {
    total += Rational(by_weight[static_cast<std::size_t>(w)]) *
             Power(rho, static_cast<unsigned>(w));
  }
  return total / Rational(BigInt(denominator()) * denominator());
}

Spectrum WalshHadamard(const BooleanFunction& f) {
  RequireBinary(f.domain(), "Walsh-Hadamard transform");
  const int d = f.domain().dimension();
  if (d > 30) throw BudgetExceeded("Walsh-Hadamard transform", std::ldexp(1.0L, d), 1u << 30);
  const TruthTable t = f.Tabulate();
  const std::uint64_t size = std::uint64_t{1} << d;
  std::vector<std::int64_t> v(size);
  for (std::uint64_t x = 0; x < size; ++x) v[x] = t.Get(x) ? -1 : 1;
  for (std::uint64_t h = 1; h < size; h <<= 1) {
    for (std::uint64_t i = 0; i < size; i += h << 1) {
      for (std::uint64_t j = i; j < i + h; ++j) {
        const std::int64_t a = v[j], b = v[j + h];
        v[j] = a + b;
        v[j + h] = a - b;
      }
    }
  }
  std::vector<std::int64_t> out(size);
  for (std::uint64_t s = 0; s < size; ++s) out[IndexToMask(s, d)] = v[s];
  return Spectrum(d, std::move(out));
}

Rational DistToAffineFromSpectrum(const Spectrum& spectrum) {
  return (1 - spectrum.MaxAbsCoefficient()) / 2;
}

ExactValue DistEvenOrOdd(const BooleanFunction& f) {
  const int d = f.domain().dimension();
  if (d == 0) return ExactValue{Rational(0), "0-dimensional function"};
  RequireBinary(f.domain(), "EvenOrOdd distance");
  const TruthTable t = f.Tabulate();
  const std::uint64_t size = t.size();
  std::uint64_t c = 0;
  for (std::uint64_t x = 0; x < size; ++x) c += t.Get(x) != t.Get(x ^ (size - 1));
  return ExactValue{Rational(BigInt(std::min(c, size - c)), BigInt(2 * size)),
                    "paired-point count over 2^" + std::to_string(d) + " points"};
}

ExactValue ExpectedRestrictedDistance(const BooleanFunction& f,
                                      std::uint64_t budget) {
  RequireBinary(f.domain(), "restricted EvenOrOdd distance");
  const int d = f.domain().dimension();
  // 3^d patterns, each costing at most 2^d lookups: 6^d in total.
  EnforceBudget("restricted EvenOrOdd distance", std::pow(6.0L, d), budget);
  const TruthTable t = f.Tabulate(budget);
  // Pattern weight 4^{-(d-m)} 2^{-m} times min(c, 2^m - c) / 2^{m+1}
  // is min(c, 2^m - c) / 2^{2d+1} for every pattern.
  BigInt total = 0;
  std::vector<int> digits(static_cast<std::size_t>(d), 0);
  std::vector<std::uint64_t> free_bits;
  std::uint64_t patterns = 1;
  for (int i = 0; i < d; ++i) patterns *= 3;
  for (std::uint64_t p = 0; p < patterns; ++p) {
    std::uint64_t base = 0;
    std::uint64_t free_mask = 0;
    free_bits.clear();
    for (int i = 0; i < d; ++i) {
      const std::uint64_t bit = std::uint64_t{1} << (d - 1 - i);
      switch (digits[static_cast<std::size_t>(i)]) {
        case 1:
          base |= bit;
          break;
        case 2:
          free_bits.push_back(bit);
          free_mask |= bit;
          break;
        default:
          break;
      }
    }
    const int m = static_cast<int>(free_bits.size());
    std::uint64_t c = 0;
    for (std::uint64_t z = 0; z < (std::uint64_t{1} << m); ++z) {
      std::uint64_t idx = base;
      for (int j = 0; j < m; ++j) {
        if ((z >> j) & 1u) idx |= free_bits[static_cast<std::size_t>(j)];
      }
      c += t.Get(idx) != t.Get(idx ^ free_mask);
    }
    total += std::min(c, (std::uint64_t{1} << m) - c);
    // Base-3 odometer.
    for (int i = 0; i < d; ++i) {
      if (++digits[static_cast<std::size_t>(i)] < 3) break;
      digits[static_cast<std::size_t>(i)] = 0;
    }
  }
  return ExactValue{Rational(total, BigInt(1) << (2 * d + 1)),
                    "sum over 3^" + std::to_string(d) + " restriction patterns"};
}

ExactValue NoiseStability(const BooleanFunction& f, const Rational& rho) {
  RequireBinary(f.domain(), "noise stability");
  if (rho < -1 || rho > 1) throw PreconditionError("rho must lie in [-1, 1]");
  const int d = f.domain().dimension();
  EnforceBudget("noise stability", std::ldexp(1.0L, 2 * d),
                kDefaultEnumerationBudget);
  const Rational spectral = WalshHadamard(f).NoiseStability(rho);

  const TruthTable t = f.Tabulate();
  const std::uint64_t size = t.size();
  std::vector<std::uint64_t> by_distance(static_cast<std::size_t>(d) + 1, 0);
  for (std::uint64_t x = 0; x < size; ++x) {
    for (std::uint64_t y = 0; y < size; ++y) {
      if (t.Get(x) != t.Get(y)) {
        ++by_distance[static_cast<std::size_t>(std::popcount(x ^ y))];
      }
    }
  }
  const Rational same = (1 + rho) / 2;
  const Rational diff = (1 - rho) / 2;
  Rational disagree = 0;
  for (int k = 0; k <= d; ++k) {
    disagree += Rational(BigInt(by_distance[static_cast<std::size_t>(k)])) *
                Power(same, static_cast<unsigned>(d - k)) *
                Power(diff, static_cast<unsigned>(k));
  }
  disagree /= Rational(BigInt(size));
  const Rational direct = 1 - 2 * disagree;
  if (direct != spectral) {
    throw std::logic_error("noise stability mismatch: spectral " +
                           FormatRational(spectral) + " vs direct " +
                           FormatRational(direct));
  }
  return ExactValue{spectral, "spectral sum, confirmed by 4^" +
                                  std::to_string(d) + " enumeration"};
}

}  // namespace dsum
