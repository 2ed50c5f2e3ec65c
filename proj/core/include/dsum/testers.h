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

// Randomized direct-sum and affinity testers. Every tester draws its
// randomness from a BitSource, queries through an OracleHandle, and returns
// the full transcript.

#ifndef DSUM_TESTERS_H_
#define DSUM_TESTERS_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dsum/bit_source.h"
#include "dsum/grid.h"
#include "dsum/oracle.h"
#include "dsum/rational.h"
#include "dsum/tuple_function.h"

namespace dsum {

// kVoid only happens under an erasure oracle.
enum class Verdict { kAccept, kReject, kVoid };

std::string_view VerdictName(Verdict v);

struct TestRun {
  Verdict verdict = Verdict::kAccept;
  std::vector<GridPoint> queries;  // issue order
  std::uint64_t bits_consumed = 0;
};

// Oracle access to a function on F_2^d.
class CubeOracle {
 public:
  virtual ~CubeOracle() = default;
  virtual int dimension() const = 0;
  virtual Answer Query(const BitMask& x) = 0;
};

// An affinity tester for functions F_2^d -> F_2. Implementations must accept
// every affine function with probability 1.
class InnerAffinityTester {
 public:
  virtual ~InnerAffinityTester() = default;
  virtual std::string name() const = 0;
  virtual Verdict Run(CubeOracle& cube, BitSource& src) const = 0;
};

// g(x) + g(x+y) + g(x+z) + g(x+y+z) = 0.
class BlrAffinityInner : public InnerAffinityTester {
 public:
  std::string name() const override { return "blr-affinity"; }
  Verdict Run(CubeOracle& cube, BitSource& src) const override;
};

// g(u) + g(phi_x(u,v)) + g(phi_x(v,u)) + g(v) = 0.
class DiamondInner : public InnerAffinityTester {
 public:
  std::string name() const override { return "diamond"; }
  Verdict Run(CubeOracle& cube, BitSource& src) const override;
};

enum class BlrKind { kLinearity, kAffinity };

// n = 2 only. Linearity: f(x) + f(y) = f(x+y), 3 queries. Affinity: 4.
TestRun BlrTest(BlrKind kind, OracleHandle& oracle, BitSource& src);

// f(a) + f(b) = f(phi_x(a,b)) + f(phi_x(b,a)). With rho = 0, a and b are
// independent and drawn lazily; rho != 0 needs a binary domain and draws
// b ~ T_rho(a).
TestRun DiamondTest(OracleHandle& oracle, BitSource& src, double rho = 0.0);

// f(a) + g(phi_x(a,b)) + h(phi_x(b,a)) + k(b) = 0. All four oracles share
// a domain. Queries are listed in the order f, g, h, k.
TestRun Diamond4Test(OracleHandle& f, OracleHandle& g, OracleHandle& h,
                     OracleHandle& k, BitSource& src);

// f(a) + f(phi_x(a,b)) + f(phi_y(a,b)) + f(phi_{x+y}(a,b)) = 0.
TestRun SquareInCubeTest(OracleHandle& oracle, BitSource& src);

// Samples a, b and runs `inner` on x -> f(phi_x(a,b)).
TestRun AffineOnSubcubeTest(OracleHandle& oracle,
                            const InnerAffinityTester& inner, BitSource& src);

// Diamond test on the restriction to a random subcube, with the lazy sampler
// of SampleQueries(kDiamondInCube).
TestRun DiamondInCubeTest(OracleHandle& oracle, BitSource& src);

// f(b) = sum_i f(phi_{e_i}(a,b)) for odd d. For even d the identity gains
// f(a) on the left and a is queried last. Queries: b, the d hybrids, [a].
TestRun ShapkaTest(OracleHandle& oracle, BitSource& src);

// x uniform, A keeps each coordinate with probability 3/4, y agrees with x on
// A and is uniform elsewhere; accept iff F(x)_i = F(y)_i on A.
TestRun DirectProductTest(const TupleFunction& f, BitSource& src);

// Samples a, b and runs the (k+1)-flat degree-k test on x -> f(phi_x(a,b)):
// base x, directions y_1..y_{k+1}, accept iff the 2^{k+1} values sum to 0.
TestRun SubcubeDegreeTest(OracleHandle& oracle, int k, BitSource& src);

// Everything the harness can drive over a single Boolean function.
enum class TestKind {
  kBlrLinearity,
  kBlrAffinity,
  kDiamond,
  kRhoDiamond,
  kSquareInCube,
  kAffineOnSubcubeBlr,
  kAffineOnSubcubeDiamond,
  kDiamondInCube,
  kShapka,
  kDegree,
};

struct TestSpec {
  TestKind kind = TestKind::kDiamond;
  int degree = 1;        // kDegree
  Rational rho = 0;      // kRhoDiamond

  std::string ToString() const;
};

// "diamond", "rho-diamond:rho=1/2", "degree-k:k=2", ... Throws ConfigError.
TestSpec ParseTestSpec(std::string_view text);
std::string_view TestKindName(TestKind kind);
std::vector<TestKind> AllTestKinds();

// Queries one run issues when nothing is erased.
int NominalQueryCount(const TestSpec& spec, const GridDomain& domain);

// Checks the spec's domain requirements; throws UnsupportedParameter.
void ValidateTestDomain(const TestSpec& spec, const GridDomain& domain);

TestRun RunTest(const TestSpec& spec, OracleHandle& oracle, BitSource& src);

}  // namespace dsum

#endif  // DSUM_TESTERS_H_
