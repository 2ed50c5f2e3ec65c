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

#include "dsum/grid.h"

#include <algorithm>
#include <limits>
#include <sstream>

#include "dsum/errors.h"

namespace dsum {

std::ostream& operator<<(std::ostream& os, const GridPoint& p) {
  os << '(';
  for (int i = 0; i < p.dimension(); ++i) {
    if (i) os << ',';
    os << p[i];
  }
  return os << ')';
}

std::size_t GridPointHash::operator()(const GridPoint& p) const noexcept {
  std::uint64_t h = 0x9e3779b97f4a7c15ull;
  for (int c : p.coords()) {
    h ^= static_cast<std::uint64_t>(c) + 0x9e3779b97f4a7c15ull + (h << 6) +
         (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

BitMask::BitMask(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  for (auto& b : bits_) {
    if (b > 1) throw PreconditionError("mask entries must be 0 or 1");
  }
}

BitMask::BitMask(std::initializer_list<int> bits) {
  bits_.reserve(bits.size());
  for (int b : bits) {
    if (b != 0 && b != 1) throw PreconditionError("mask entries must be 0 or 1");
    bits_.push_back(static_cast<std::uint8_t>(b));
  }
}

BitMask BitMask::FromPacked(std::uint64_t packed, int d) {
  if (d < 0 || d > 64) throw PreconditionError("packed masks hold at most 64 bits");
  BitMask m(d);
  for (int i = 0; i < d; ++i) m.bits_[static_cast<std::size_t>(i)] = (packed >> i) & 1u;
  return m;
}

BitMask BitMask::AllOnes(int d) {
  BitMask m(d);
  std::fill(m.bits_.begin(), m.bits_.end(), 1);
  return m;
}

int BitMask::Weight() const {
  return static_cast<int>(std::count(bits_.begin(), bits_.end(), 1));
}

std::uint64_t BitMask::Packed() const {
  if (bits_.size() > 64) throw PreconditionError("mask longer than 64 bits");
  std::uint64_t packed = 0;
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    packed |= static_cast<std::uint64_t>(bits_[i]) << i;
  }
  return packed;
}

BitMask BitMask::operator+(const BitMask& other) const {
  if (other.bits_.size() != bits_.size()) {
    throw PreconditionError("mask dimensions differ");
  }
  BitMask r(*this);
  for (std::size_t i = 0; i < bits_.size(); ++i) r.bits_[i] ^= other.bits_[i];
  return r;
}

BitMask BitMask::Complement() const {
  BitMask r(*this);
  for (auto& b : r.bits_) b ^= 1;
  return r;
}

std::optional<std::uint64_t> CheckedMul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) {
    return std::nullopt;
  }
  return a * b;
}

std::optional<std::uint64_t> CheckedPow(std::uint64_t base, int exponent) {
  std::uint64_t r = 1;
  for (int i = 0; i < exponent; ++i) {
    auto next = CheckedMul(r, base);
    if (!next) return std::nullopt;
    r = *next;
  }
  return r;
}

void EnforceBudget(const char* what, long double required,
                   std::uint64_t budget) {
  if (required > static_cast<long double>(budget)) {
    throw BudgetExceeded(what, required, budget);
  }
}

GridDomain::GridDomain(std::vector<int> sizes) : sizes_(std::move(sizes)) {
  if (sizes_.empty()) {
    throw PreconditionError("a grid needs at least one coordinate");
  }
  for (std::size_t i = 0; i < sizes_.size(); ++i) {
    if (sizes_[i] < 2) {
      throw PreconditionError("alphabet size of coordinate " +
                              std::to_string(i) + " must be at least 2");
    }
  }
  ComputeStrides();
}

GridDomain GridDomain::Uniform(int n, int d) {
  if (d < 1) throw PreconditionError("dimension must be at least 1");
  return GridDomain(std::vector<int>(static_cast<std::size_t>(d), n));
}

GridDomain GridDomain::SinglePoint() {
  GridDomain g;
  g.point_count_ = 1;
  return g;
}

void GridDomain::ComputeStrides() {
  strides_.assign(sizes_.size(), 0);
  std::optional<std::uint64_t> acc = 1;
  for (std::size_t i = sizes_.size(); i-- > 0;) {
    if (acc) strides_[i] = *acc;
    if (acc) acc = CheckedMul(*acc, static_cast<std::uint64_t>(sizes_[i]));
  }
  point_count_ = acc;
}

bool GridDomain::IsUniform() const {
  return std::all_of(sizes_.begin(), sizes_.end(),
                     [&](int s) { return s == sizes_.front(); });
}

int GridDomain::UniformSize() const {
  if (sizes_.empty()) return 2;
  if (!IsUniform()) {
    throw UnsupportedParameter("operation needs a uniform alphabet, got " +
                               ToString());
  }
  return sizes_.front();
}

bool GridDomain::IsBinary() const {
  return std::all_of(sizes_.begin(), sizes_.end(), [](int s) { return s == 2; });
}

std::uint64_t GridDomain::CheckedPointCount(std::uint64_t budget) const {
  if (!point_count_) {
    long double req = 1;
    for (int s : sizes_) req *= s;
    throw BudgetExceeded("enumerating " + ToString(), req, budget);
  }
  EnforceBudget(("enumerating " + ToString()).c_str(),
                static_cast<long double>(*point_count_), budget);
  return *point_count_;
}

bool GridDomain::Contains(const GridPoint& p) const {
  if (p.dimension() != dimension()) return false;
  for (int i = 0; i < dimension(); ++i) {
    if (p[i] < 0 || p[i] >= sizes_[static_cast<std::size_t>(i)]) return false;
  }
  return true;
}

void GridDomain::CheckPoint(const GridPoint& p) const {
  if (p.dimension() != dimension()) {
    throw PreconditionError("point has dimension " +
                            std::to_string(p.dimension()) + ", domain has " +
                            std::to_string(dimension()));
  }
  for (int i = 0; i < dimension(); ++i) {
    if (p[i] < 0 || p[i] >= sizes_[static_cast<std::size_t>(i)]) {
      throw PreconditionError("coordinate " + std::to_string(i) + " = " +
                              std::to_string(p[i]) + " outside [0, " +
                              std::to_string(sizes_[static_cast<std::size_t>(i)]) +
                              ")");
    }
  }
}

std::uint64_t GridDomain::IndexOf(const GridPoint& p) const {
  if (!point_count_) throw BudgetExceeded("indexing " + ToString(), 0, 0);
  std::uint64_t idx = 0;
  for (int i = 0; i < dimension(); ++i) {
    idx += static_cast<std::uint64_t>(p[i]) * strides_[static_cast<std::size_t>(i)];
  }
  return idx;
}

GridPoint GridDomain::PointAt(std::uint64_t index) const {
  std::vector<int> coords(sizes_.size());
  for (std::size_t i = sizes_.size(); i-- > 0;) {
    const auto n = static_cast<std::uint64_t>(sizes_[i]);
    coords[i] = static_cast<int>(index % n);
    index /= n;
  }
  return GridPoint(std::move(coords));
}

std::string GridDomain::ToString() const {
  std::ostringstream os;
  if (sizes_.empty()) return "d=0";
  if (IsUniform()) {
    os << "n=" << sizes_.front() << " d=" << sizes_.size();
  } else {
    os << '[';
    for (std::size_t i = 0; i < sizes_.size(); ++i) {
      if (i) os << ',';
      os << sizes_[i];
    }
    os << ']';
  }
  return os.str();
}

GridPoint Interpolate(const GridPoint& a, const GridPoint& b,
                      const BitMask& x) {
  if (a.dimension() != b.dimension() || a.dimension() != x.dimension()) {
    throw PreconditionError("interpolate: dimensions of a, b, x differ");
  }
  GridPoint r = a;
  for (int i = 0; i < a.dimension(); ++i) {
    if (x[i]) r[i] = b[i];
  }
  return r;
}

}  // namespace dsum
