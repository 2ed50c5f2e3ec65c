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

#include "dsum/direct_sum.h"

#include <sstream>

#include "dsum/errors.h"

namespace dsum {

DirectSum::DirectSum(GridDomain domain, std::vector<Table> tables)
    : domain_(std::move(domain)), tables_(std::move(tables)) {
  if (static_cast<int>(tables_.size()) != domain_.dimension()) {
    throw PreconditionError("direct sum needs one table per coordinate");
  }
  for (int i = 0; i < domain_.dimension(); ++i) {
    const Table& t = tables_[static_cast<std::size_t>(i)];
    if (static_cast<int>(t.size()) != domain_.size(i)) {
      throw PreconditionError("table " + std::to_string(i) +
                              " length does not match the alphabet");
    }
    for (auto v : t) {
      if (v > 1) throw PreconditionError("table entries must be 0 or 1");
    }
  }
  Canonicalize();
}

void DirectSum::Canonicalize() {
  for (std::size_t i = 1; i < tables_.size(); ++i) {
    if (tables_[i][0] == 0) continue;
    for (auto& v : tables_[i]) v ^= 1;
    for (auto& v : tables_[0]) v ^= 1;
  }
}

DirectSum DirectSum::Zero(const GridDomain& domain) {
  std::vector<Table> tables;
  for (int s : domain.sizes()) tables.emplace_back(static_cast<std::size_t>(s), 0);
  return DirectSum(domain, std::move(tables));
}

DirectSum DirectSum::Random(const GridDomain& domain, BitSource& src) {
  std::vector<Table> tables;
  for (int i = 0; i < domain.dimension(); ++i) {
    Table t(static_cast<std::size_t>(domain.size(i)), 0);
    for (std::size_t j = (i == 0 ? 0 : 1); j < t.size(); ++j) {
      t[j] = src.Bit() ? 1 : 0;
    }
    tables.push_back(std::move(t));
  }
  return DirectSum(domain, std::move(tables));
}

std::optional<std::uint64_t> DirectSum::CanonicalCount(
    const GridDomain& domain) {
  int exponent = 0;
  for (int i = 0; i < domain.dimension(); ++i) {
    exponent += i == 0 ? domain.size(i) : domain.size(i) - 1;
  }
  if (exponent > 63) return std::nullopt;
  return std::uint64_t{1} << exponent;
}

DirectSum DirectSum::FromCanonicalIndex(const GridDomain& domain,
                                        std::uint64_t index) {
  const auto count = CanonicalCount(domain);
  if (!count || index >= *count) {
    throw PreconditionError("canonical direct sum index out of range");
  }
  std::vector<Table> tables;
  for (int i = 0; i < domain.dimension(); ++i) {
    Table t(static_cast<std::size_t>(domain.size(i)), 0);
    for (std::size_t j = (i == 0 ? 0 : 1); j < t.size(); ++j) {
      t[j] = index & 1u;
      index >>= 1;
    }
    tables.push_back(std::move(t));
  }
  return DirectSum(domain, std::move(tables));
}

bool DirectSum::Evaluate(const GridPoint& p) const {
  std::uint8_t v = 0;
  for (std::size_t i = 0; i < tables_.size(); ++i) {
    v ^= tables_[i][static_cast<std::size_t>(p[static_cast<int>(i)])];
  }
  return v != 0;
}

bool DirectSum::Eval(const GridPoint& p) const {
  domain_.CheckPoint(p);
  return Evaluate(p);
}

std::string DirectSum::ToString() const {
  std::ostringstream os;
  os << "ds[";
  for (std::size_t i = 0; i < tables_.size(); ++i) {
    if (i) os << '|';
    for (auto v : tables_[i]) os << static_cast<int>(v);
  }
  os << ']';
  return os.str();
}

}  // namespace dsum
