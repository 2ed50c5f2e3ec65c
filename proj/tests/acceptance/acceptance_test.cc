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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails. Tolerances and sizes are pinned below.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "dsum/adversarial.h"
#include "dsum/decode.h"
#include "dsum/distance.h"
#include "dsum/errors.h"
#include "dsum/estimate.h"
#include "dsum/exact.h"
#include "dsum/fourier.h"
#include "dsum/function_spec.h"
#include "dsum/golden.h"
#include "dsum/sampling.h"
#include "dsum/testers.h"

namespace dsum {
namespace {

// Criterion 1.
constexpr int kPlantedSums = 100;
constexpr std::uint64_t kCompletenessRunsPerTester = 1000000;
// Criterion 2 and 3.
constexpr int kRandomFunctionsD4 = 10000;
// Criterion 4.
constexpr std::uint64_t kGoldenSamples = 1000000;
// Criterion 5.
constexpr double kMajorityFloor = 0.01;
constexpr std::uint64_t kMajoritySamples = 100000;
// Criterion 8.
constexpr int kDecodeVotes = 101;
constexpr int kDecodePoints = 1000;
// Criterion 9.
constexpr std::uint64_t kBitsSamples = 100000;
constexpr double kBitsRelativeTolerance = 0.01;
// Criterion 10.
constexpr std::uint64_t kErasureRuns = 10000;
// Criterion 11.
constexpr int kMarginalDraws = 20;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void Require(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) detail << "first failure: " << what << "; ";
      pass = false;
    }
  }
};

BooleanFunction FunctionFromBits(int d, std::uint64_t bits) {
  const std::uint64_t size = std::uint64_t{1} << d;
  TruthTable t(size);
  for (std::uint64_t i = 0; i < size; ++i) t.Set(i, (bits >> i) & 1u);
  return BooleanFunction::FromTable(GridDomain::Uniform(2, d), std::move(t));
}

BooleanFunction FunctionOnGrid(const GridDomain& g, std::uint64_t bits) {
  const std::uint64_t size = g.CheckedPointCount();
  TruthTable t(size);
  for (std::uint64_t i = 0; i < size; ++i) t.Set(i, (bits >> i) & 1u);
  return BooleanFunction::FromTable(g, std::move(t));
}

bool Applies(const TestSpec& spec, const GridDomain& g) {
  try {
    ValidateTestDomain(spec, g);
    return true;
  } catch (const UnsupportedParameter&) {
    return false;
  }
}

std::vector<TestSpec> CompletenessSpecs() {
  return {
      {TestKind::kDiamond, 1, 0},
      {TestKind::kRhoDiamond, 1, Rational(1, 2)},
      {TestKind::kRhoDiamond, 1, Rational(-1, 2)},
      {TestKind::kSquareInCube, 1, 0},
      {TestKind::kAffineOnSubcubeBlr, 1, 0},
      {TestKind::kAffineOnSubcubeDiamond, 1, 0},
      {TestKind::kShapka, 1, 0},
      {TestKind::kDiamondInCube, 1, 0},
      {TestKind::kDegree, 1, 0},
      {TestKind::kDegree, 2, 0},
  };
}

void Completeness(Outcome& out) {
  const std::vector<TestSpec> specs = CompletenessSpecs();
  const std::uint64_t per_sum = kCompletenessRunsPerTester / kPlantedSums;
  std::vector<std::uint64_t> runs(specs.size() + 1, 0);
  std::uint64_t rejections = 0;
  int exact_checked = 0;
  for (int s = 0; s < kPlantedSums; ++s) {
    const int n = 2 + s % 3;
    const int d = 2 + (s / 3) % 9;
    const GridDomain g = GridDomain::Uniform(n, d);
    BitSource pick = BitSource::Derive(2024, static_cast<std::uint64_t>(s));
    const BooleanFunction f =
        BooleanFunction::FromDirectSum(DirectSum::Random(g, pick));
    for (std::size_t t = 0; t < specs.size(); ++t) {
      if (!Applies(specs[t], g)) continue;
      const Estimate e = EstimateRejection(specs[t], f, per_sum, 7 + s);
      rejections += e.rejections;
      runs[t] += e.samples;
      out.Require(e.rejections == 0, specs[t].ToString() + " rejected a sum");
      if (n <= 3 && d <= 3 &&
          RandomnessSpaceSize(specs[t], g) <= kDefaultEnumerationBudget) {
        out.Require(ExactRejectionProbability(specs[t], f).value == 0,
                    "exact " + specs[t].ToString());
        ++exact_checked;
      }
    }
    // Four-function test with all four arguments equal.
    BitSource src = BitSource::Derive(99, static_cast<std::uint64_t>(s));
    OracleHandle o(f);
    for (std::uint64_t r = 0; r < per_sum; ++r) {
      const bool rejected =
          Diamond4Test(o, o, o, o, src).verdict == Verdict::kReject;
      rejections += rejected;
      out.Require(!rejected, "4-function rejected a sum");
    }
    runs.back() += per_sum;
    if (n <= 3 && d <= 3) {
      out.Require(ExactDiamond4Rejection(f, f, f, f).value == 0,
                  "exact 4-function");
      ++exact_checked;
    }
  }
  for (std::size_t t = 0; t < specs.size(); ++t) {
    out.Require(runs[t] > 0, specs[t].ToString() + " never applicable");
  }
  std::uint64_t total = 0;
  for (std::uint64_t r : runs) total += r;
  out.detail << total << " runs over " << specs.size() + 1
             << " testers, rejections=" << rejections
             << ", exact zero checks=" << exact_checked;
}

void RestrictionSandwich(Outcome& out) {
  const TestSpec diamond{TestKind::kDiamond, 1, 0};
  int violations = 0;
  int checked = 0;
  auto check = [&](const BooleanFunction& f) {
    const Rational eps = ExactRejectionProbability(diamond, f).value;
    const Rational delta = ExpectedRestrictedDistance(f).value;
    violations += !(2 * delta <= eps && eps <= 4 * delta);
    ++checked;
  };
  for (std::uint64_t bits = 0; bits < 256; ++bits) check(FunctionFromBits(3, bits));
  const GridDomain g4 = GridDomain::Uniform(2, 4);
  for (int i = 0; i < kRandomFunctionsD4; ++i) {
    check(RandomFunction(g4, 1000 + static_cast<std::uint64_t>(i)));
  }
  out.Require(violations == 0, "sandwich violated");
  out.detail << checked << " functions, violations=" << violations;
}

void FourierIdentity(Outcome& out) {
  int mismatches = 0;
  int checked = 0;
  auto check = [&](const BooleanFunction& f) {
    const Rational brute = DistToDirectSum(f).distance.value;
    mismatches += brute != DistToAffineFromSpectrum(WalshHadamard(f));
    ++checked;
  };
  for (int d = 1; d <= 3; ++d) {
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << (1u << d)); ++bits) {
      check(FunctionFromBits(d, bits));
    }
  }
  const GridDomain g4 = GridDomain::Uniform(2, 4);
  for (int i = 0; i < kRandomFunctionsD4; ++i) {
    check(RandomFunction(g4, 5000 + static_cast<std::uint64_t>(i)));
  }
  out.Require(mismatches == 0, "spectral and brute-force distances differ");
  out.detail << checked << " functions, mismatches=" << mismatches;
}

void GoldenValues(Outcome& out) {
  struct Case {
    const char* test;
    Rational value;
  };
  const std::vector<Case> cases = {{"diamond", Rational(1, 8)},
                                   {"square-in-cube", Rational(3, 32)},
                                   {"blr-affinity", Rational(3, 8)}};
  const auto golden = ReadGoldenFile(std::string(DSUM_TEST_SOURCE_DIR) +
                                     "/golden/exact_values.txt");
  std::uint64_t seed = 31;
  for (const Case& c : cases) {
    const TestSpec spec = ParseTestSpec(c.test);
    const Rational exact = ExactRejectionProbability(spec, And(2)).value;
    out.Require(exact == c.value, std::string(c.test) + " exact value");
    bool frozen = false;
    for (const GoldenEntry& e : golden) {
      frozen |= e.test == c.test && e.function == "and:d=2" && e.value == exact;
    }
    out.Require(frozen, std::string(c.test) + " missing from fixtures");
    const Estimate est = EstimateRejection(spec, And(2), kGoldenSamples, ++seed);
    out.Require(est.Contains(ToDouble(exact)), std::string(c.test) + " MC CI");
    out.detail << c.test << "=" << FormatRational(exact) << " (mc "
               << est.value << " +/- " << est.half_width << ") ";
  }
}

void MajorityRejection(Outcome& out) {
  const TestSpec diamond{TestKind::kDiamond, 1, 0};
  const Rational exact5 = ExactRejectionProbability(diamond, Majority(5)).value;
  out.Require(exact5 > Rational(1, 100), "majority_5 exact");
  out.detail << "d=5 exact " << FormatRational(exact5);
  for (int d : {7, 9, 11}) {
    const Estimate e = EstimateRejection(diamond, Majority(d), kMajoritySamples,
                                         static_cast<std::uint64_t>(d));
    out.Require(e.value > kMajorityFloor && e.lower() > 0,
                "majority_" + std::to_string(d));
    out.detail << "; d=" << d << " " << e.value << " [" << e.lower() << ", "
               << e.upper() << "]";
  }
}

void ShapkaSoundness(Outcome& out) {
  const TestSpec shapka{TestKind::kShapka, 1, 0};
  int violations = 0;
  int checked = 0;
  auto check = [&](const BooleanFunction& f) {
    const Rational rej = ExactRejectionProbability(shapka, f).value;
    const Rational dist = DistToDirectSum(f).distance.value;
    if (rej < dist) ++violations;
    ++checked;
  };
  for (std::uint64_t bits = 0; bits < 256; ++bits) check(FunctionFromBits(3, bits));
  const GridDomain g32 = GridDomain::Uniform(3, 2);
  for (std::uint64_t bits = 0; bits < 512; ++bits) check(FunctionOnGrid(g32, bits));
  // Odd d at n = 3: every direct sum with one flipped point.
  const GridDomain g33 = GridDomain::Uniform(3, 3);
  for (std::uint64_t i = 0; i < *DirectSum::CanonicalCount(g33); ++i) {
    const BooleanFunction sum =
        BooleanFunction::FromDirectSum(DirectSum::FromCanonicalIndex(g33, i));
    for (std::uint64_t p = 0; p < g33.CheckedPointCount(); ++p) {
      const GridPoint point = g33.PointAt(p);
      check(CorruptPoints(sum, std::span<const GridPoint>(&point, 1)).function);
    }
  }
  out.Require(violations == 0, "rejection below distance");
  out.detail << checked << " functions, violations=" << violations;
}

void DichotomyFloor(Outcome& out) {
  int violations = 0;
  int checked = 0;
  for (std::uint64_t bits = 0; bits < 256; ++bits) {
    const BooleanFunction k = FunctionFromBits(3, bits);
    const DirectSumDistance dist = DistToDirectSum(k);
    if (dist.distance.value > Rational(1, 8)) continue;
    for (const DirectSum& sum : dist.minimizers) {
      const BooleanFunction f = BooleanFunction::FromDirectSum(sum);
      const Rational rej = ExactDiamond4Rejection(f, f, f, k).value;
      violations += rej < dist.distance.value / 2;
      ++checked;
    }
  }
  out.Require(checked > 0, "no function within 1/8");
  out.Require(violations == 0, "rejection below dist/2");
  out.detail << checked << " (k, closest sum) pairs, violations=" << violations;
}

void Decoding(Outcome& out) {
  // Fast decoder: n = 3, d = 9, exactly floor(N/20) flipped points.
  {
    const GridDomain g = GridDomain::Uniform(3, 9);
    BitSource src(808);
    const DirectSum sum = DirectSum::Random(g, src);
    const Corruption c = CorruptExactFraction(BooleanFunction::FromDirectSum(sum),
                                              Rational(1, 20), src);
    OracleHandle o(c.function);
    int errors = 0;
    for (int i = 0; i < kDecodePoints; ++i) {
      const GridPoint b = SampleUniformPoint(g, src);
      errors += FastDecode(o, b, kDecodeVotes, src).value != sum.Evaluate(b);
    }
    out.Require(errors == 0, "fast decoder errors");
    out.detail << "fast n=3 d=9 eps=" << FormatRational(c.realized_fraction)
               << " errors=" << errors;
  }
  // Shapka vote: n = 3, d = 3. floor(27/40) = 0, so one point is flipped
  // instead (fraction 1/27 > 1/40), a strictly harder instance.
  {
    const GridDomain g = GridDomain::Uniform(3, 3);
    BitSource src(909);
    const DirectSum sum = DirectSum::Random(g, src);
    const GridPoint flip = SampleUniformPoint(g, src);
    const Corruption c = CorruptPoints(BooleanFunction::FromDirectSum(sum),
                                       std::span<const GridPoint>(&flip, 1));
    OracleHandle o(c.function);
    int errors = 0;
    for (int i = 0; i < kDecodePoints; ++i) {
      const GridPoint b = SampleUniformPoint(g, src);
      errors += ShapkaVote(o, b, kDecodeVotes, src).value != sum.Evaluate(b);
    }
    out.Require(errors == 0, "shapka vote errors");
    out.detail << "; shapka n=3 d=3 eps=" << FormatRational(c.realized_fraction)
               << " errors=" << errors;
  }
}

void RandomnessAccounting(Outcome& out) {
  const QueryPattern patterns[] = {QueryPattern::kSquareInCube,
                                   QueryPattern::kDiamond,
                                   QueryPattern::kDiamondInCube};
  for (int n : {2, 4, 16}) {
    double means[3];
    for (int p = 0; p < 3; ++p) {
      const BitsReport r =
          RandomnessReport(patterns[p], n, 100, kBitsSamples, 17 + n + p);
      means[p] = r.mean;
      out.Require(r.relative_error < kBitsRelativeTolerance,
                  std::string(QueryPatternName(patterns[p])) + " n=" +
                      std::to_string(n));
      out.detail << QueryPatternName(patterns[p]) << "@" << n << " "
                 << r.mean << "/" << r.closed_form << " ";
    }
    if (n == 16) {
      out.Require(means[2] < means[0] && means[2] < means[1],
                  "diamond-in-cube not smallest at n=16");
    }
  }
}

void Erasures(Outcome& out) {
  const ErasureOptions erase{1, std::make_shared<AnticipateFourthStrategy>()};
  for (const char* test : {"diamond", "square-in-cube"}) {
    for (const char* fn : {"majority:d=5", "ds:n=3,d=6,seed=3"}) {
      const Estimate e = EstimateRejection(
          ParseTestSpec(test), BuildFunction(fn).function, kErasureRuns, 5, erase);
      out.Require(e.voids == kErasureRuns, std::string(test) + " on " + fn);
      out.detail << test << "/" << fn << " void_rate=" << e.void_rate << " ";
    }
  }
}

void BiasedDistanceToZero(Outcome& out) {
  int checked = 0;
  Rational worst_ratio = 1000;
  for (const auto& [d, k] : {std::pair{3, 1}, std::pair{3, 2}, std::pair{4, 2}}) {
    const std::vector<std::uint32_t> monomials = MonomialsUpToDegree(d, k);
    const std::uint64_t count = std::uint64_t{1} << monomials.size();
    const std::vector<Rational> two_thirds(static_cast<std::size_t>(d),
                                           Rational(2, 3));
    BitSource src(static_cast<std::uint64_t>(d * 10 + k));
    std::vector<std::vector<Rational>> draws;
    for (int t = 0; t < kMarginalDraws; ++t) {
      std::vector<Rational> m;
      // Uniform on {1/10, 11/100, ..., 9/10}.
      for (int i = 0; i < d; ++i) m.push_back(Rational(10 + src.Uniform(81), 100));
      draws.push_back(std::move(m));
    }
    const Rational floor_two_thirds = Power(Rational(1, 3), static_cast<unsigned>(k));
    const Rational floor_general = Power(Rational(1, 10), static_cast<unsigned>(k));
    for (std::uint64_t mask = 1; mask < count; ++mask) {
      std::vector<std::uint32_t> terms;
      for (std::size_t i = 0; i < monomials.size(); ++i) {
        if ((mask >> i) & 1u) terms.push_back(monomials[i]);
      }
      const F2Polynomial p(d, terms);
      const Rational w = BiasedNonzeroWeight(p, two_thirds).value;
      out.Require(w >= floor_two_thirds, "2/3-biased weight below 3^-k: " + p.ToString());
      if (w / floor_two_thirds < worst_ratio) worst_ratio = w / floor_two_thirds;
      for (const auto& m : draws) {
        out.Require(BiasedNonzeroWeight(p, m).value >= floor_general,
                    "weight below 10^-k: " + p.ToString());
      }
      ++checked;
    }
  }
  out.detail << checked << " polynomials, min weight / 3^-k = "
             << FormatRational(worst_ratio);
}

void MinimumDistance(Outcome& out) {
  std::uint64_t pairs = 0;
  for (const auto& [n, d] : {std::pair{2, 4}, std::pair{3, 3}}) {
    const GridDomain g = GridDomain::Uniform(n, d);
    const std::uint64_t count = *DirectSum::CanonicalCount(g);
    std::vector<BooleanFunction> sums;
    for (std::uint64_t i = 0; i < count; ++i) {
      sums.push_back(
          BooleanFunction::FromDirectSum(DirectSum::FromCanonicalIndex(g, i)));
    }
    Rational smallest = 1;
    for (std::uint64_t i = 0; i < count; ++i) {
      for (std::uint64_t j = i + 1; j < count; ++j) {
        const Rational dist = DistExact(sums[i], sums[j]);
        if (dist < smallest) smallest = dist;
        ++pairs;
      }
    }
    out.Require(smallest >= Rational(1, n), "pair closer than 1/n");
    out.detail << "n=" << n << " d=" << d << " min=" << FormatRational(smallest)
               << " ";
  }
  out.detail << "over " << pairs << " pairs";
}

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;
  std::function<void(Outcome&)> run;
};

}  // namespace
}  // namespace dsum

int main() {
  using dsum::Criterion;
  const std::vector<Criterion> criteria = {
      {1, "completeness", 120, dsum::Completeness},
      {2, "restriction sandwich", 300, dsum::RestrictionSandwich},
      {3, "fourier identity", 120, dsum::FourierIdentity},
      {4, "golden exact values", 60, dsum::GoldenValues},
      {5, "majority rejection", 120, dsum::MajorityRejection},
      {6, "shapka soundness", 300, dsum::ShapkaSoundness},
      {7, "dichotomy floor", 180, dsum::DichotomyFloor},
      {8, "decoding", 60, dsum::Decoding},
      {9, "randomness accounting", 60, dsum::RandomnessAccounting},
      {10, "erasure model", 30, dsum::Erasures},
      {11, "biased distance to zero", 180, dsum::BiasedDistanceToZero},
      {12, "minimum distance", 60, dsum::MinimumDistance},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    dsum::Outcome out;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(out);
    } catch (const std::exception& e) {
      out.Require(false, std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(
                               std::chrono::steady_clock::now() - start)
                               .count();
    out.Require(seconds < c.limit_seconds, "over the time limit");
    failed += !out.pass;
    std::printf("%s criterion %2d %-24s %7.2fs (limit %gs)  %s\n",
                out.pass ? "PASS" : "FAIL", c.id, c.name, seconds,
                c.limit_seconds, out.detail.str().c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n",
              static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
