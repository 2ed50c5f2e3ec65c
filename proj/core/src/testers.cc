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

#include "dsum/testers.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "dsum/errors.h"
#include "dsum/sampling.h"

namespace dsum {
namespace {

// Issues queries on one oracle for one run and tracks erasures.
class Run {
 public:
  Run(OracleHandle& oracle, BitSource& src)
      : oracle_(oracle), src_(src), start_bits_(src.bits_consumed()) {
    oracle_.BeginRun();
  }

  Answer Ask(const GridPoint& p) { return Ask(oracle_, p); }
  Answer Ask(OracleHandle& oracle, const GridPoint& p) {
    run_.queries.push_back(p);
    const Answer a = oracle.Query(p);
    if (!a) erased_ = true;
    return a;
  }
  // Returns false for an erased point; Finish then reports kVoid.
  bool Query(const GridPoint& p) { return Ask(p).value_or(false); }
  bool Query(OracleHandle& oracle, const GridPoint& p) {
    return Ask(oracle, p).value_or(false);
  }

  // Accepts iff `parity` is even, unless something was erased.
  TestRun Finish(bool parity) {
    run_.verdict = erased_ ? Verdict::kVoid
                           : (parity ? Verdict::kReject : Verdict::kAccept);
    run_.bits_consumed = src_.bits_consumed() - start_bits_;
    return std::move(run_);
  }
  TestRun Finish(Verdict v) {
    run_.verdict = v;
    run_.bits_consumed = src_.bits_consumed() - start_bits_;
    return std::move(run_);
  }

 private:
  OracleHandle& oracle_;
  BitSource& src_;
  std::uint64_t start_bits_;
  TestRun run_;
  bool erased_ = false;
};

// x -> f(phi_x(a, b)).
class SubcubeOracle : public CubeOracle {
 public:
  SubcubeOracle(Run& run, GridPoint a, GridPoint b)
      : run_(run), a_(std::move(a)), b_(std::move(b)) {}
  int dimension() const override { return a_.dimension(); }
  Answer Query(const BitMask& x) override {
    return run_.Ask(Interpolate(a_, b_, x));
  }

 private:
  Run& run_;
  GridPoint a_, b_;
};

BitMask MaskXor(const BitMask& x, const BitMask& y) { return x + y; }

BitMask MaskInterpolate(const BitMask& u, const BitMask& v, const BitMask& x) {
  BitMask out(u.dimension());
  for (int i = 0; i < u.dimension(); ++i) out.Set(i, x[i] ? v[i] : u[i]);
  return out;
}

void RequireBinary(const GridDomain& domain, const char* test) {
  if (!domain.IsBinary()) {
    throw UnsupportedParameter(std::string(test) + " needs n = 2");
  }
}

GridPoint Hybrid(const GridPoint& a, const GridPoint& b, int i) {
  GridPoint p = a;
  p[i] = b[i];
  return p;
}

}  // namespace

std::string_view VerdictName(Verdict v) {
  switch (v) {
    case Verdict::kAccept:
      return "accept";
    case Verdict::kReject:
      return "reject";
    case Verdict::kVoid:
      return "void";
  }
  return "?";
}

Verdict BlrAffinityInner::Run(CubeOracle& cube, BitSource& src) const {
  const int d = cube.dimension();
  const BitMask x = SampleMask(d, src);
  const BitMask y = SampleMask(d, src);
  const BitMask z = SampleMask(d, src);
  const Answer q[] = {cube.Query(x), cube.Query(MaskXor(x, y)),
                      cube.Query(MaskXor(x, z)),
                      cube.Query(MaskXor(MaskXor(x, y), z))};
  bool parity = false;
  for (const Answer& a : q) {
    if (!a) return Verdict::kVoid;
    parity ^= *a;
  }
  return parity ? Verdict::kReject : Verdict::kAccept;
}

Verdict DiamondInner::Run(CubeOracle& cube, BitSource& src) const {
  const int d = cube.dimension();
  const BitMask u = SampleMask(d, src);
  const BitMask v = SampleMask(d, src);
  const BitMask x = SampleMask(d, src);
  const Answer q[] = {cube.Query(u), cube.Query(MaskInterpolate(u, v, x)),
                      cube.Query(MaskInterpolate(v, u, x)), cube.Query(v)};
  bool parity = false;
  for (const Answer& a : q) {
    if (!a) return Verdict::kVoid;
    parity ^= *a;
  }
  return parity ? Verdict::kReject : Verdict::kAccept;
}

TestRun BlrTest(BlrKind kind, OracleHandle& oracle, BitSource& src) {
  const GridDomain& domain = oracle.domain();
  RequireBinary(domain, "BLR");
  const int d = domain.dimension();
  Run run(oracle, src);
  auto point = [d](const BitMask& m) {
    GridPoint p(std::vector<int>(static_cast<std::size_t>(d), 0));
    for (int i = 0; i < d; ++i) p[i] = m[i];
    return p;
  };
  const BitMask x = SampleMask(d, src);
  const BitMask y = SampleMask(d, src);
  bool parity = false;
  if (kind == BlrKind::kLinearity) {
    parity ^= run.Query(point(x));
    parity ^= run.Query(point(y));
    parity ^= run.Query(point(x + y));
  } else {
    const BitMask z = SampleMask(d, src);
    parity ^= run.Query(point(x));
    parity ^= run.Query(point(x + y));
    parity ^= run.Query(point(x + z));
    parity ^= run.Query(point(x + y + z));
  }
  return run.Finish(parity);
}

TestRun DiamondTest(OracleHandle& oracle, BitSource& src, double rho) {
  const GridDomain& domain = oracle.domain();
  Run run(oracle, src);
  std::vector<GridPoint> points;
  if (rho == 0.0) {
    points = SampleQueries(QueryPattern::kDiamond, domain, src).points;
  } else {
    RequireBinary(domain, "rho-Diamond");
    const GridPoint a = SampleUniformPoint(domain, src);
    const BitMask x = SampleMask(domain.dimension(), src);
    const GridPoint b = NoiseSample(domain, a, rho, src);
    points = {a, Interpolate(a, b, x), Interpolate(b, a, x), b};
  }
  bool parity = false;
  for (const auto& p : points) parity ^= run.Query(p);
  return run.Finish(parity);
}

TestRun Diamond4Test(OracleHandle& f, OracleHandle& g, OracleHandle& h,
                     OracleHandle& k, BitSource& src) {
  if (!(f.domain() == g.domain() && f.domain() == h.domain() &&
        f.domain() == k.domain())) {
    throw PreconditionError("4-function Diamond needs a shared domain");
  }
  g.BeginRun();
  h.BeginRun();
  k.BeginRun();
  Run run(f, src);
  const auto pts = SampleQueries(QueryPattern::kDiamond, f.domain(), src).points;
  bool parity = run.Query(f, pts[0]);
  parity ^= run.Query(g, pts[1]);
  parity ^= run.Query(h, pts[2]);
  parity ^= run.Query(k, pts[3]);
  return run.Finish(parity);
}

TestRun SquareInCubeTest(OracleHandle& oracle, BitSource& src) {
  Run run(oracle, src);
  const auto pts =
      SampleQueries(QueryPattern::kSquareInCube, oracle.domain(), src).points;
  bool parity = false;
  for (const auto& p : pts) parity ^= run.Query(p);
  return run.Finish(parity);
}

TestRun AffineOnSubcubeTest(OracleHandle& oracle,
                            const InnerAffinityTester& inner, BitSource& src) {
  Run run(oracle, src);
  const GridPoint a = SampleUniformPoint(oracle.domain(), src);
  const GridPoint b = SampleUniformPoint(oracle.domain(), src);
  SubcubeOracle cube(run, a, b);
  const Verdict v = inner.Run(cube, src);
  return run.Finish(v);
}

TestRun DiamondInCubeTest(OracleHandle& oracle, BitSource& src) {
  Run run(oracle, src);
  const auto pts =
      SampleQueries(QueryPattern::kDiamondInCube, oracle.domain(), src).points;
  bool parity = false;
  for (const auto& p : pts) parity ^= run.Query(p);
  return run.Finish(parity);
}

TestRun ShapkaTest(OracleHandle& oracle, BitSource& src) {
  const GridDomain& domain = oracle.domain();
  const int d = domain.dimension();
  Run run(oracle, src);
  const GridPoint a = SampleUniformPoint(domain, src);
  const GridPoint b = SampleUniformPoint(domain, src);
  bool parity = run.Query(b);
  for (int i = 0; i < d; ++i) parity ^= run.Query(Hybrid(a, b, i));
  if (d % 2 == 0) parity ^= run.Query(a);
  return run.Finish(parity);
}

TestRun DirectProductTest(const TupleFunction& f, BitSource& src) {
  const GridDomain& domain = f.domain();
  const std::uint64_t start = src.bits_consumed();
  const GridPoint x = SampleUniformPoint(domain, src);
  GridPoint y = x;
  std::vector<int> agree;
  for (int i = 0; i < domain.dimension(); ++i) {
    // Two fair bits: keep unless both are 0.
    const bool keep = src.Bit() || src.Bit();
    if (keep) {
      agree.push_back(i);
    } else {
      y[i] = src.Uniform(domain.size(i));
    }
  }
  TestRun run;
  run.queries = {x, y};
  run.verdict = Verdict::kAccept;
  for (int i : agree) {
    if (f.EvalCoordinate(x, i) != f.EvalCoordinate(y, i)) {
      run.verdict = Verdict::kReject;
      break;
    }
  }
  run.bits_consumed = src.bits_consumed() - start;
  return run;
}

TestRun SubcubeDegreeTest(OracleHandle& oracle, int k, BitSource& src) {
  if (k < 1) throw PreconditionError("degree test needs k >= 1");
  if (k > 20) throw UnsupportedParameter("degree test supports k <= 20");
  const GridDomain& domain = oracle.domain();
  const int d = domain.dimension();
  Run run(oracle, src);
  const GridPoint a = SampleUniformPoint(domain, src);
  const GridPoint b = SampleUniformPoint(domain, src);
  const BitMask x = SampleMask(d, src);
  std::vector<BitMask> dirs;
  for (int i = 0; i <= k; ++i) dirs.push_back(SampleMask(d, src));
  bool parity = false;
  for (std::uint32_t s = 0; s < (1u << (k + 1)); ++s) {
    BitMask m = x;
    for (int i = 0; i <= k; ++i) {
      if ((s >> i) & 1u) m = m + dirs[static_cast<std::size_t>(i)];
    }
    parity ^= run.Query(Interpolate(a, b, m));
  }
  return run.Finish(parity);
}

std::string_view TestKindName(TestKind kind) {
  switch (kind) {
    case TestKind::kBlrLinearity:
      return "blr-linearity";
    case TestKind::kBlrAffinity:
      return "blr-affinity";
    case TestKind::kDiamond:
      return "diamond";
    case TestKind::kRhoDiamond:
      return "rho-diamond";
    case TestKind::kSquareInCube:
      return "square-in-cube";
    case TestKind::kAffineOnSubcubeBlr:
      return "affine-on-subcube-blr";
    case TestKind::kAffineOnSubcubeDiamond:
      return "affine-on-subcube-diamond";
    case TestKind::kDiamondInCube:
      return "diamond-in-cube";
    case TestKind::kShapka:
      return "shapka";
    case TestKind::kDegree:
      return "degree-k";
  }
  return "?";
}

std::vector<TestKind> AllTestKinds() {
  return {TestKind::kBlrLinearity,       TestKind::kBlrAffinity,
          TestKind::kDiamond,            TestKind::kRhoDiamond,
          TestKind::kSquareInCube,       TestKind::kAffineOnSubcubeBlr,
          TestKind::kAffineOnSubcubeDiamond, TestKind::kDiamondInCube,
          TestKind::kShapka,             TestKind::kDegree};
}

std::string TestSpec::ToString() const {
  std::string out(TestKindName(kind));
  if (kind == TestKind::kRhoDiamond) out += ":rho=" + FormatRational(rho);
  if (kind == TestKind::kDegree) out += ":k=" + std::to_string(degree);
  return out;
}

TestSpec ParseTestSpec(std::string_view text) {
  const std::string s(text);
  const auto colon = s.find(':');
  const std::string name = s.substr(0, colon);
  std::map<std::string, std::string> params;
  if (colon != std::string::npos) {
    std::stringstream rest(s.substr(colon + 1));
    std::string item;
    while (std::getline(rest, item, ',')) {
      const auto eq = item.find('=');
      if (eq == std::string::npos || eq == 0) {
        throw ConfigError("malformed test parameter '" + item + "'", s);
      }
      params[item.substr(0, eq)] = item.substr(eq + 1);
    }
  }
  TestSpec spec;
  bool found = false;
  for (TestKind k : AllTestKinds()) {
    if (name == TestKindName(k)) {
      spec.kind = k;
      found = true;
    }
  }
  if (name == "affine-on-subcube") {
    spec.kind = TestKind::kAffineOnSubcubeBlr;
    found = true;
    if (auto it = params.find("inner"); it != params.end()) {
      if (it->second == "diamond") {
        spec.kind = TestKind::kAffineOnSubcubeDiamond;
      } else if (it->second != "blr") {
        throw ConfigError("unknown inner tester '" + it->second + "'", s);
      }
      params.erase(it);
    }
  }
  if (!found) throw ConfigError("unknown test '" + name + "'", s);

  auto take = [&](const std::string& key) -> std::optional<std::string> {
    auto it = params.find(key);
    if (it == params.end()) return std::nullopt;
    std::string v = it->second;
    params.erase(it);
    return v;
  };
  if (spec.kind == TestKind::kRhoDiamond) {
    spec.rho = Rational(1, 2);
    if (auto v = take("rho")) {
      try {
        spec.rho = ParseRational(*v);
      } catch (const std::exception&) {
        throw ConfigError("bad rho '" + *v + "'", s);
      }
    }
    if (spec.rho <= -1 || spec.rho >= 1) {
      throw ConfigError("rho must lie in (-1, 1)", s);
    }
  }
  if (spec.kind == TestKind::kDegree) {
    if (auto v = take("k")) {
      try {
        spec.degree = std::stoi(*v);
      } catch (const std::exception&) {
        throw ConfigError("bad k '" + *v + "'", s);
      }
    }
    if (spec.degree < 1 || spec.degree > 20) {
      throw ConfigError("k must lie in [1, 20]", s);
    }
  }
  if (!params.empty()) {
    throw ConfigError("unknown parameter '" + params.begin()->first + "'", s);
  }
  return spec;
}

int NominalQueryCount(const TestSpec& spec, const GridDomain& domain) {
  switch (spec.kind) {
    case TestKind::kBlrLinearity:
      return 3;
    case TestKind::kShapka:
      return domain.dimension() + (domain.dimension() % 2 == 0 ? 2 : 1);
    case TestKind::kDegree:
      return 1 << (spec.degree + 1);
    default:
      return 4;
  }
}

void ValidateTestDomain(const TestSpec& spec, const GridDomain& domain) {
  if (domain.dimension() < 1) {
    throw UnsupportedParameter("tests need dimension >= 1");
  }
  switch (spec.kind) {
    case TestKind::kBlrLinearity:
    case TestKind::kBlrAffinity:
      RequireBinary(domain, "BLR");
      break;
    case TestKind::kRhoDiamond:
      if (spec.rho != 0) RequireBinary(domain, "rho-Diamond");
      if (spec.rho <= -1 || spec.rho >= 1) {
        throw UnsupportedParameter("rho must lie in (-1, 1)");
      }
      break;
    case TestKind::kDegree:
      if (spec.degree < 1) throw UnsupportedParameter("degree needs k >= 1");
      break;
    default:
      break;
  }
}

TestRun RunTest(const TestSpec& spec, OracleHandle& oracle, BitSource& src) {
  ValidateTestDomain(spec, oracle.domain());
  switch (spec.kind) {
    case TestKind::kBlrLinearity:
      return BlrTest(BlrKind::kLinearity, oracle, src);
    case TestKind::kBlrAffinity:
      return BlrTest(BlrKind::kAffinity, oracle, src);
    case TestKind::kDiamond:
      return DiamondTest(oracle, src);
    case TestKind::kRhoDiamond:
      return DiamondTest(oracle, src, ToDouble(spec.rho));
    case TestKind::kSquareInCube:
      return SquareInCubeTest(oracle, src);
    case TestKind::kAffineOnSubcubeBlr:
      return AffineOnSubcubeTest(oracle, BlrAffinityInner(), src);
    case TestKind::kAffineOnSubcubeDiamond:
      return AffineOnSubcubeTest(oracle, DiamondInner(), src);
    case TestKind::kDiamondInCube:
      return DiamondInCubeTest(oracle, src);
    case TestKind::kShapka:
      return ShapkaTest(oracle, src);
    case TestKind::kDegree:
      return SubcubeDegreeTest(oracle, spec.degree, src);
  }
  throw PreconditionError("unknown test kind");
}

}  // namespace dsum
