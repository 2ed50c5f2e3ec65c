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

#include "dsum/distance.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <sstream>

#include "dsum/errors.h"
#include "dsum/fourier.h"

namespace dsum {
namespace {

using Words = std::vector<std::uint64_t>;

Words Indicator(std::uint64_t size) { return Words((size + 63) / 64, 0); }

void XorInto(Words& into, const Words& from) {
  for (std::size_t w = 0; w < into.size(); ++w) into[w] ^= from[w];
}

std::uint64_t Differences(const Words& a, const Words& b) {
  std::uint64_t c = 0;
  for (std::size_t w = 0; w < a.size(); ++w) c += std::popcount(a[w] ^ b[w]);
  return c;
}

// Minimum Hamming distance from `target` to the span of `generators`,
// visiting all 2^k combinations in Gray-code order. Returns the distance and
// every minimizing combination.
std::pair<std::uint64_t, std::vector<std::uint64_t>> MinOverSpan(
    const Words& target, const std::vector<Words>& generators) {
  const int k = static_cast<int>(generators.size());
  Words current(target.size(), 0);
  std::uint64_t best = Differences(current, target);
  std::vector<std::uint64_t> argmin = {0};
  for (std::uint64_t step = 1; step < (std::uint64_t{1} << k); ++step) {
    XorInto(current, generators[static_cast<std::size_t>(std::countr_zero(step))]);
    const std::uint64_t gray = step ^ (step >> 1);
    const std::uint64_t dist = Differences(current, target);
    if (dist < best) {
      best = dist;
      argmin = {gray};
    } else if (dist == best) {
      argmin.push_back(gray);
    }
  }
  std::sort(argmin.begin(), argmin.end());
  return {best, argmin};
}

void RequireBinary(const GridDomain& domain, const char* what) {
  if (!domain.IsBinary()) {
    throw UnsupportedParameter(std::string(what) + " needs n = 2");
  }
}

}  // namespace

DirectSumDistance DistToDirectSum(const BooleanFunction& f,
                                  std::uint64_t budget) {
  const GridDomain& domain = f.domain();
  const int d = domain.dimension();
  const std::uint64_t size = domain.CheckedPointCount(budget);
  long double exponent = domain.size(0);
  for (int i = 1; i < d; ++i) exponent += domain.size(i) - 1;
  EnforceBudget("direct-sum distance",
                std::ldexp(static_cast<long double>(size), static_cast<int>(exponent)),
                budget);

  const TruthTable t = f.Tabulate(budget);
  // One generator per canonical-index bit: the indicator of x_i = v.
  std::vector<Words> generators;
  for (int i = 0; i < d; ++i) {
    for (int v = (i == 0 ? 0 : 1); v < domain.size(i); ++v) {
      Words g = Indicator(size);
      for (std::uint64_t idx = 0; idx < size; ++idx) {
        if (static_cast<int>((idx / domain.stride(i)) % domain.size(i)) == v) {
          g[idx >> 6] |= std::uint64_t{1} << (idx & 63);
        }
      }
      generators.push_back(std::move(g));
    }
  }
  auto [best, argmin] = MinOverSpan(t.words(), generators);
  std::vector<DirectSum> minimizers;
  for (std::uint64_t index : argmin) {
    minimizers.push_back(DirectSum::FromCanonicalIndex(domain, index));
  }
  DirectSum witness = minimizers.front();
  return DirectSumDistance{
      ExactValue{Rational(BigInt(best), BigInt(size)),
                 "minimum over 2^" + std::to_string(generators.size()) +
                     " canonical direct sums"},
      std::move(witness), std::move(minimizers)};
}

ExactValue DistToDirectSumSpectral(const BooleanFunction& f) {
  RequireBinary(f.domain(), "spectral direct-sum distance");
  return ExactValue{DistToAffineFromSpectrum(WalshHadamard(f)),
                    "(1 - max |fhat(S)|) / 2"};
}

F2Polynomial::F2Polynomial(int d, std::vector<std::uint32_t> monomials)
    : d_(d) {
  if (d < 0 || d > 31) throw PreconditionError("polynomial needs 0 <= d <= 31");
  std::sort(monomials.begin(), monomials.end());
  // x + x = 0 over F_2: keep monomials that occur an odd number of times.
  for (std::size_t i = 0; i < monomials.size();) {
    std::size_t j = i;
    while (j < monomials.size() && monomials[j] == monomials[i]) ++j;
    if (monomials[i] >> d) {
      throw PreconditionError("monomial uses a variable beyond x_" +
                              std::to_string(d));
    }
    if ((j - i) % 2 == 1) monomials_.push_back(monomials[i]);
    i = j;
  }
}

int F2Polynomial::Degree() const {
  int deg = -1;
  for (auto m : monomials_) deg = std::max(deg, std::popcount(m));
  return deg;
}

bool F2Polynomial::Evaluate(std::uint32_t point) const {
  bool v = false;
  for (auto m : monomials_) v ^= (point & m) == m;
  return v;
}

std::string F2Polynomial::ToString() const {
  if (monomials_.empty()) return "0";
  std::ostringstream out;
  for (std::size_t k = 0; k < monomials_.size(); ++k) {
    if (k) out << " + ";
    const auto m = monomials_[k];
    if (m == 0) {
      out << "1";
      continue;
    }
    for (int i = 0; i < d_; ++i) {
      if ((m >> i) & 1u) out << "x" << i + 1;
    }
  }
  return out.str();
}

std::vector<std::uint32_t> MonomialsUpToDegree(int d, int k) {
  if (d < 0 || d > 31) throw PreconditionError("need 0 <= d <= 31");
  if (d > 24) throw UnsupportedParameter("monomial listing supports d <= 24");
  std::vector<std::uint32_t> out;
  for (int deg = 0; deg <= std::min(k, d); ++deg) {
    for (std::uint32_t m = 0; m < (1u << d); ++m) {
      if (std::popcount(m) == deg) out.push_back(m);
    }
  }
  return out;
}

ExactValue DistToJuntaDegree(const BooleanFunction& f, int k,
                             std::uint64_t budget) {
  RequireBinary(f.domain(), "junta-degree distance");
  if (k < 0) throw PreconditionError("degree must be non-negative");
  const int d = f.domain().dimension();
  const std::uint64_t size = f.domain().CheckedPointCount(budget);
  // Pre-check the count before listing monomials.
  long double count = 0;
  {
    long double binom = 1;
    for (int i = 0; i <= std::min(k, d); ++i) {
      if (i > 0) binom = binom * (d - i + 1) / i;
      count += binom;
    }
  }
  if (count > 62) {
    throw BudgetExceeded("junta-degree distance", std::ldexp(1.0L, 62), budget);
  }
  EnforceBudget("junta-degree distance",
                std::ldexp(static_cast<long double>(size), static_cast<int>(count)),
                budget);
  const auto monomials = MonomialsUpToDegree(d, k);
  std::vector<Words> generators;
  for (auto m : monomials) {
    Words g = Indicator(size);
    for (std::uint64_t idx = 0; idx < size; ++idx) {
      // Table index bit (d - 1 - i) is x_{i+1}.
      std::uint32_t point = 0;
      for (int i = 0; i < d; ++i) {
        if ((idx >> (d - 1 - i)) & 1u) point |= 1u << i;
      }
      if ((point & m) == m) g[idx >> 6] |= std::uint64_t{1} << (idx & 63);
    }
    generators.push_back(std::move(g));
  }
  const TruthTable t = f.Tabulate(budget);
  const auto [best, argmin] = MinOverSpan(t.words(), generators);
  return ExactValue{Rational(BigInt(best), BigInt(size)),
                    "minimum over 2^" + std::to_string(monomials.size()) +
                        " polynomials of degree <= " + std::to_string(k)};
}

ExactValue BiasedNonzeroWeight(const F2Polynomial& p,
                               std::span<const Rational> marginals) {
  const int d = p.dimension();
  if (static_cast<int>(marginals.size()) != d) {
    throw PreconditionError("need one marginal per variable");
  }
  if (p.IsZero()) {
    throw PreconditionError("the zero polynomial has weight 0 by definition");
  }
  for (const auto& m : marginals) {
    if (m < Rational(1, 10) || m > Rational(9, 10)) {
      throw PreconditionError("marginals must lie in [1/10, 9/10]");
    }
  }
  if (d > 24) throw UnsupportedParameter("biased weight supports d <= 24");
  Rational total = 0;
  for (std::uint32_t x = 0; x < (1u << d); ++x) {
    if (!p.Evaluate(x)) continue;
    Rational w = 1;
    for (int i = 0; i < d; ++i) {
      w *= ((x >> i) & 1u) ? marginals[static_cast<std::size_t>(i)]
                           : 1 - marginals[static_cast<std::size_t>(i)];
    }
    total += w;
  }
  return ExactValue{total, "weighted enumeration over 2^" + std::to_string(d) +
                               " points"};
}

}  // namespace dsum
