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

#ifndef DSUM_ESTIMATE_H_
#define DSUM_ESTIMATE_H_

#include <cstdint>
#include <memory>

#include "dsum/boolean_function.h"
#include "dsum/oracle.h"
#include "dsum/sampling.h"
#include "dsum/testers.h"

namespace dsum {

inline constexpr double kConfidenceLevel = 0.99;

// sqrt(ln(2 / (1 - confidence)) / (2 samples)): two-sided Hoeffding
// half-width for the mean of `samples` values in [0, 1].
double HoeffdingHalfWidth(std::uint64_t samples,
                          double confidence = kConfidenceLevel);

struct Estimate {
  // Rejections over non-void runs.
  double value = 0.0;
  std::uint64_t samples = 0;
  std::uint64_t rejections = 0;
  std::uint64_t voids = 0;
  double void_rate = 0.0;
  // Computed from the number of non-void runs (1.0 when there are none).
  double half_width = 1.0;
  double mean_bits = 0.0;
  std::uint64_t seed = 0;

  double lower() const { return value - half_width; }
  double upper() const { return value + half_width; }
  bool Contains(double x) const { return lower() <= x && x <= upper(); }
};

struct ErasureOptions {
  int per_query = 0;
  std::shared_ptr<const ErasureStrategy> strategy;
};

// `samples` i.i.d. runs, each on a fresh oracle (so erasures never leak
// between runs). Deterministic in `seed`.
Estimate EstimateRejection(const TestSpec& spec, const BooleanFunction& f,
                           std::uint64_t samples, std::uint64_t seed,
                           const ErasureOptions& erasure = {});

struct BitsReport {
  QueryPattern pattern;
  int n = 0;
  int d = 0;
  std::uint64_t samples = 0;
  double mean = 0.0;
  // Hoeffding half-width scaled by the per-sample maximum.
  double half_width = 0.0;
  double closed_form = 0.0;
  double relative_error = 0.0;
};

// Mean bits used by the lazy query sampler; needs n a power of two.
BitsReport RandomnessReport(QueryPattern pattern, int n, int d,
                            std::uint64_t samples, std::uint64_t seed);

}  // namespace dsum

#endif  // DSUM_ESTIMATE_H_
