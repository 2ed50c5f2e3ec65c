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

#include "dsum/boolean_function.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <sstream>

#include "dsum/errors.h"

namespace dsum {
namespace {

class TableBackend : public FunctionBackend {
 public:
  TableBackend(GridDomain domain, TruthTable table)
      : domain_(std::move(domain)), table_(std::move(table)) {}
  bool Evaluate(const GridPoint& p) const override {
    return table_.Get(domain_.IndexOf(p));
  }
  std::string Describe() const override {
    return "table[" + domain_.ToString() + "]";
  }
  const TruthTable* table() const override { return &table_; }

 private:
  GridDomain domain_;
  TruthTable table_;
};

class DirectSumBackend : public FunctionBackend {
 public:
  explicit DirectSumBackend(DirectSum sum) : sum_(std::move(sum)) {}
  bool Evaluate(const GridPoint& p) const override { return sum_.Evaluate(p); }
  std::string Describe() const override { return sum_.ToString(); }
  const DirectSum* direct_sum() const override { return &sum_; }

 private:
  DirectSum sum_;
};

class PredicateBackend : public FunctionBackend {
 public:
  PredicateBackend(std::function<bool(const GridPoint&)> f, std::string desc)
      : f_(std::move(f)), desc_(std::move(desc)) {}
  bool Evaluate(const GridPoint& p) const override { return f_(p); }
  std::string Describe() const override { return desc_; }

 private:
  std::function<bool(const GridPoint&)> f_;
  std::string desc_;
};

class CorruptedBackend : public FunctionBackend {
 public:
  CorruptedBackend(BooleanFunction base, TruthTable flips, std::uint64_t count)
      : base_(std::move(base)), flips_(std::move(flips)), count_(count) {}
  bool Evaluate(const GridPoint& p) const override {
    return base_.EvaluateUnchecked(p) ^
           flips_.Get(base_.domain().IndexOf(p));
  }
  std::string Describe() const override {
    return base_.Describe() + "+flips(" + std::to_string(count_) + ")";
  }

 private:
  BooleanFunction base_;
  TruthTable flips_;
  std::uint64_t count_;
};

// Uniform on [0, n) from raw bits.
std::uint64_t UniformIndex(std::uint64_t n, BitSource& src) {
  if (n <= 1) return 0;
  const int width = std::bit_width(n - 1);
  for (;;) {
    const std::uint64_t v = src.Bits(width);
    if (v < n) return v;
  }
}

void RequireBinary(const GridDomain& domain, const char* what) {
  if (!domain.IsBinary()) {
    throw UnsupportedParameter(std::string(what) +
                               " is only defined on binary domains");
  }
}

Corruption MakeCorruption(const BooleanFunction& f, TruthTable flips) {
  Corruption c{f, {}, Rational(0)};
  for (std::uint64_t i = 0; i < flips.size(); ++i) {
    if (flips.Get(i)) c.flipped.push_back(i);
  }
  const std::uint64_t count = c.flipped.size();
  c.realized_fraction =
      Rational(BigInt(count), BigInt(std::max<std::uint64_t>(flips.size(), 1)));
  c.function = BooleanFunction(
      f.domain(), std::make_shared<CorruptedBackend>(f, std::move(flips), count));
  return c;
}

}  // namespace

BooleanFunction::BooleanFunction(GridDomain domain,
                                 std::shared_ptr<const FunctionBackend> backend)
    : domain_(std::move(domain)), backend_(std::move(backend)) {
  if (!backend_) throw PreconditionError("function backend is null");
}

BooleanFunction BooleanFunction::FromTable(GridDomain domain,
                                           TruthTable table) {
  const auto count = domain.PointCount();
  if (!count || *count != table.size()) {
    throw PreconditionError("truth table size " + std::to_string(table.size()) +
                            " does not match " + domain.ToString());
  }
  auto backend = std::make_shared<TableBackend>(domain, std::move(table));
  return BooleanFunction(std::move(domain), std::move(backend));
}

BooleanFunction BooleanFunction::FromDirectSum(DirectSum sum) {
  GridDomain domain = sum.domain();
  return BooleanFunction(std::move(domain),
                         std::make_shared<DirectSumBackend>(std::move(sum)));
}

BooleanFunction BooleanFunction::FromPredicate(
    GridDomain domain, std::function<bool(const GridPoint&)> f,
    std::string description) {
  return BooleanFunction(std::move(domain),
                         std::make_shared<PredicateBackend>(
                             std::move(f), std::move(description)));
}

bool BooleanFunction::Eval(const GridPoint& p) const {
  domain_.CheckPoint(p);
  return backend_->Evaluate(p);
}

TruthTable BooleanFunction::Tabulate(std::uint64_t budget) const {
  if (const TruthTable* t = backend_->table()) return *t;
  const std::uint64_t count = domain_.CheckedPointCount(budget);
  TruthTable table(count);
  GridPoint p(std::vector<int>(static_cast<std::size_t>(domain_.dimension()), 0));
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    if (backend_->Evaluate(p)) table.Set(idx, true);
    // Odometer step, last coordinate fastest.
    for (int i = domain_.dimension() - 1; i >= 0; --i) {
      if (++p[i] < domain_.size(i)) break;
      p[i] = 0;
    }
  }
  return table;
}

BooleanFunction Majority(int d) {
  if (d < 1 || d % 2 == 0) {
    throw PreconditionError("majority needs an odd dimension, got " +
                            std::to_string(d));
  }
  return BooleanFunction::FromPredicate(
      GridDomain::Uniform(2, d),
      [d](const GridPoint& p) {
        int ones = 0;
        for (int c : p.coords()) ones += c;
        return 2 * ones > d;
      },
      "majority:d=" + std::to_string(d));
}

BooleanFunction And(int d) {
  return BooleanFunction::FromPredicate(
      GridDomain::Uniform(2, d),
      [](const GridPoint& p) {
        return std::all_of(p.coords().begin(), p.coords().end(),
                           [](int c) { return c == 1; });
      },
      "and:d=" + std::to_string(d));
}

BooleanFunction Parity(const GridDomain& domain) {
  std::vector<DirectSum::Table> tables;
  for (int s : domain.sizes()) {
    DirectSum::Table t(static_cast<std::size_t>(s));
    for (int v = 0; v < s; ++v) t[static_cast<std::size_t>(v)] = v & 1;
    tables.push_back(std::move(t));
  }
  return BooleanFunction::FromDirectSum(DirectSum(domain, std::move(tables)));
}

BooleanFunction Constant(const GridDomain& domain, bool value) {
  DirectSum zero = DirectSum::Zero(domain);
  std::vector<DirectSum::Table> tables = zero.tables();
  for (auto& v : tables[0]) v = value ? 1 : 0;
  return BooleanFunction::FromDirectSum(DirectSum(domain, std::move(tables)));
}

BooleanFunction Dictator(const GridDomain& domain, int coordinate) {
  if (coordinate < 0 || coordinate >= domain.dimension()) {
    throw PreconditionError("dictator coordinate out of range");
  }
  std::vector<DirectSum::Table> tables = DirectSum::Zero(domain).tables();
  auto& t = tables[static_cast<std::size_t>(coordinate)];
  for (std::size_t v = 0; v < t.size(); ++v) t[v] = v & 1;
  return BooleanFunction::FromDirectSum(DirectSum(domain, std::move(tables)));
}

BooleanFunction RandomFunction(const GridDomain& domain, std::uint64_t seed,
                               std::uint64_t budget) {
  const std::uint64_t count = domain.CheckedPointCount(budget);
  BitSource src(seed);
  TruthTable t(count);
  for (std::uint64_t i = 0; i < count; ++i) t.Set(i, src.Bit());
  return BooleanFunction::FromTable(domain, std::move(t));
}

Rational DistExact(const BooleanFunction& f, const BooleanFunction& g,
                   std::uint64_t budget) {
  if (!(f.domain() == g.domain())) {
    throw PreconditionError("distance between functions on different domains");
  }
  const std::uint64_t count = f.domain().CheckedPointCount(budget);
  const TruthTable tf = f.Tabulate(budget);
  const TruthTable tg = g.Tabulate(budget);
  return Rational(BigInt(tf.CountDifferences(tg)), BigInt(count));
}

Corruption CorruptAtRate(const BooleanFunction& f, double rate, BitSource& src,
                         std::uint64_t budget) {
  if (!(rate >= 0.0 && rate <= 1.0)) {
    throw PreconditionError("corruption rate must lie in [0, 1]");
  }
  const std::uint64_t count = f.domain().CheckedPointCount(budget);
  TruthTable flips(count);
  for (std::uint64_t i = 0; i < count; ++i) {
    if (src.Bernoulli(rate)) flips.Set(i, true);
  }
  return MakeCorruption(f, std::move(flips));
}

Corruption CorruptExactFraction(const BooleanFunction& f,
                                const Rational& fraction, BitSource& src,
                                std::uint64_t budget) {
  if (fraction < 0 || fraction > 1) {
    throw PreconditionError("corruption fraction must lie in [0, 1]");
  }
  const std::uint64_t count = f.domain().CheckedPointCount(budget);
  const BigInt k_big = boost::multiprecision::numerator(fraction) * count /
                       boost::multiprecision::denominator(fraction);
  const auto k = k_big.convert_to<std::uint64_t>();
  std::vector<std::uint64_t> idx(count);
  std::iota(idx.begin(), idx.end(), std::uint64_t{0});
  TruthTable flips(count);
  for (std::uint64_t i = 0; i < k; ++i) {
    const std::uint64_t j = i + UniformIndex(count - i, src);
    std::swap(idx[i], idx[j]);
    flips.Set(idx[i], true);
  }
  return MakeCorruption(f, std::move(flips));
}

Corruption CorruptPoints(const BooleanFunction& f,
                         std::span<const GridPoint> points,
                         std::uint64_t budget) {
  const std::uint64_t count = f.domain().CheckedPointCount(budget);
  TruthTable flips(count);
  for (const auto& p : points) {
    f.domain().CheckPoint(p);
    flips.Set(f.domain().IndexOf(p), true);
  }
  return MakeCorruption(f, std::move(flips));
}

BooleanFunction ApplyRestriction(const BooleanFunction& f,
                                 const RestrictionPattern& pattern) {
  RequireBinary(f.domain(), "restriction");
  const int d = f.domain().dimension();
  if (pattern.dimension() != d) {
    throw PreconditionError("restriction pattern dimension differs from f");
  }
  std::vector<int> free_coords;
  GridPoint base(std::vector<int>(static_cast<std::size_t>(d), 0));
  for (int i = 0; i < d; ++i) {
    switch (pattern[i]) {
      case RestrictionAction::kFree:
        free_coords.push_back(i);
        break;
      case RestrictionAction::kFixOne:
        base[i] = 1;
        break;
      case RestrictionAction::kFixZero:
        break;
    }
  }
  const int m = static_cast<int>(free_coords.size());
  if (m > 62) throw BudgetExceeded("restricted table", std::ldexp(1.0L, m), 0);
  GridDomain sub = m == 0 ? GridDomain::SinglePoint() : GridDomain::Uniform(2, m);
  const std::uint64_t count = std::uint64_t{1} << m;
  TruthTable t(count);
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    GridPoint p = base;
    // Index bit (m-1-j) is free coordinate j: last coordinate fastest.
    for (int j = 0; j < m; ++j) {
      p[free_coords[static_cast<std::size_t>(j)]] =
          static_cast<int>((idx >> (m - 1 - j)) & 1u);
    }
    if (f.EvaluateUnchecked(p)) t.Set(idx, true);
  }
  return BooleanFunction::FromTable(std::move(sub), std::move(t));
}

}  // namespace dsum
