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

#include "dsum/estimate.h"

#include <cmath>

#include "dsum/errors.h"

namespace dsum {

double HoeffdingHalfWidth(std::uint64_t samples, double confidence) {
  if (samples == 0) return 1.0;
  return std::sqrt(std::log(2.0 / (1.0 - confidence)) /
                   (2.0 * static_cast<double>(samples)));
}

Estimate EstimateRejection(const TestSpec& spec, const BooleanFunction& f,
                           std::uint64_t samples, std::uint64_t seed,
                           const ErasureOptions& erasure) {
  if (samples == 0) throw PreconditionError("need at least one sample");
  ValidateTestDomain(spec, f.domain());
  BitSource src(seed);
  Estimate e;
  e.samples = samples;
  e.seed = seed;
  std::uint64_t bits = 0;
  for (std::uint64_t i = 0; i < samples; ++i) {
    OracleHandle oracle(f, erasure.per_query, erasure.strategy);
    const TestRun run = RunTest(spec, oracle, src);
    bits += run.bits_consumed;
    if (run.verdict == Verdict::kVoid) {
      ++e.voids;
    } else if (run.verdict == Verdict::kReject) {
      ++e.rejections;
    }
  }
  const std::uint64_t decided = samples - e.voids;
  e.value = decided ? static_cast<double>(e.rejections) / decided : 0.0;
  e.void_rate = static_cast<double>(e.voids) / samples;
  e.half_width = HoeffdingHalfWidth(decided);
  e.mean_bits = static_cast<double>(bits) / samples;
  return e;
}

BitsReport RandomnessReport(QueryPattern pattern, int n, int d,
                            std::uint64_t samples, std::uint64_t seed) {
  if (samples == 0) throw PreconditionError("need at least one sample");
  if (d < 1) throw PreconditionError("need d >= 1");
  const int lg = Log2Exact(n);
  const GridDomain domain = GridDomain::Uniform(n, d);
  BitSource src(seed);
  std::uint64_t total = 0;
  for (std::uint64_t i = 0; i < samples; ++i) {
    total += SampleQueries(pattern, domain, src).bits;
  }
  // Largest possible per-sample draw, for scaling the Hoeffding bound.
  double per_coordinate = 0;
  switch (pattern) {
    case QueryPattern::kSquareInCube:
      per_coordinate = 2.0 * lg + 2.0;
      break;
    case QueryPattern::kDiamond:
      per_coordinate = 2.0 * lg + 1.0;
      break;
    case QueryPattern::kDiamondInCube:
      per_coordinate = 2.0 * lg + 3.0;
      break;
  }
  BitsReport r;
  r.pattern = pattern;
  r.n = n;
  r.d = d;
  r.samples = samples;
  r.mean = static_cast<double>(total) / samples;
  r.half_width = per_coordinate * d * HoeffdingHalfWidth(samples);
  r.closed_form = ExpectedLazyBits(pattern, n, d);
  r.relative_error = std::abs(r.mean - r.closed_form) / r.closed_form;
  return r;
}

}  // namespace dsum
