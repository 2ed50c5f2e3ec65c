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

// Fourier analysis of functions on F_2^d (binary grids only).

#ifndef DSUM_FOURIER_H_
#define DSUM_FOURIER_H_

#include <cstdint>
#include <vector>

#include "dsum/boolean_function.h"
#include "dsum/rational.h"

namespace dsum {

// Coefficients of (-1)^f: fhat(S) = E_x[(-1)^{f(x)} chi_S(x)], stored as
// integer numerators over the common denominator 2^d. Subsets are bit masks
// with bit i standing for coordinate i.
class Spectrum {
 public:
  Spectrum(int d, std::vector<std::int64_t> numerators);

  int dimension() const { return d_; }
  std::uint64_t size() const { return numerators_.size(); }
  std::uint64_t denominator() const { return std::uint64_t{1} << d_; }
  std::int64_t numerator(std::uint64_t subset) const {
    return numerators_[subset];
  }
  Rational Coefficient(std::uint64_t subset) const;

  Rational MaxAbsCoefficient() const;
  // Smallest subset attaining the maximum magnitude.
  std::uint64_t ArgMaxAbs() const;
  // sum_S fhat(S)^2; exactly 1 for Boolean f.
  Rational SumOfSquares() const;
  // sum_S rho^{|S|} fhat(S)^2.
  Rational NoiseStability(const Rational& rho) const;

 private:
  int d_;
  std::vector<std::int64_t> numerators_;
};

// Fast Walsh-Hadamard transform, d 2^d additions.
Spectrum WalshHadamard(const BooleanFunction& f);

// (1 - max_S |fhat(S)|) / 2.
Rational DistToAffineFromSpectrum(const Spectrum& spectrum);

// min(dist(f, Even), dist(f, Odd)) where Even: f(x+1) = f(x) and
// Odd: f(x+1) = f(x) + 1. Equals min(c, 2^d - c) / 2^{d+1} with
// c = #{x : f(x) != f(x+1)}.
ExactValue DistEvenOrOdd(const BooleanFunction& f);

// E_R[dist(R(f), EvenOrOdd)] summed exactly over all 3^d restriction
// patterns, each weighted by its probability.
ExactValue ExpectedRestrictedDistance(
    const BooleanFunction& f, std::uint64_t budget = kDefaultEnumerationBudget);

// stab_rho(f), computed both spectrally and as 1 - 2 Pr[f(x) != f(y)] with
// y ~ T_rho(x) by enumeration; throws std::logic_error if they disagree.
ExactValue NoiseStability(const BooleanFunction& f,
                          const Rational& rho = Rational(1, 2));

}  // namespace dsum

#endif  // DSUM_FOURIER_H_
