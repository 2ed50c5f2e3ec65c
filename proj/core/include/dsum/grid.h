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

// Product domains [n_1] x ... x [n_d] with 0-indexed alphabets, points in
// them, and masks over F_2^d.

#ifndef DSUM_GRID_H_
#define DSUM_GRID_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace dsum {

inline constexpr std::uint64_t kDefaultEnumerationBudget = std::uint64_t{1}
                                                           << 32;

class GridPoint {
 public:
  GridPoint() = default;
  explicit GridPoint(std::vector<int> coords) : coords_(std::move(coords)) {}
  GridPoint(std::initializer_list<int> coords) : coords_(coords) {}

  int dimension() const { return static_cast<int>(coords_.size()); }
  int operator[](int i) const { return coords_[static_cast<std::size_t>(i)]; }
  int& operator[](int i) { return coords_[static_cast<std::size_t>(i)]; }
  std::span<const int> coords() const { return coords_; }

  auto operator<=>(const GridPoint&) const = default;

 private:
  std::vector<int> coords_;
};

std::ostream& operator<<(std::ostream& os, const GridPoint& p);

struct GridPointHash {
  std::size_t operator()(const GridPoint& p) const noexcept;
};

// A vector over F_2 of length d. Addition is coordinatewise XOR.
class BitMask {
 public:
  BitMask() = default;
  explicit BitMask(int d) : bits_(static_cast<std::size_t>(d), 0) {}
  explicit BitMask(std::vector<std::uint8_t> bits);
  BitMask(std::initializer_list<int> bits);

  // Coordinate i takes bit i of `packed`. Requires d <= 64.
  static BitMask FromPacked(std::uint64_t packed, int d);
  static BitMask AllOnes(int d);

  int dimension() const { return static_cast<int>(bits_.size()); }
  bool operator[](int i) const { return bits_[static_cast<std::size_t>(i)] != 0; }
  void Set(int i, bool v) { bits_[static_cast<std::size_t>(i)] = v ? 1 : 0; }
  int Weight() const;
  // Inverse of FromPacked.
  std::uint64_t Packed() const;

  BitMask operator+(const BitMask& other) const;
  BitMask Complement() const;

  auto operator<=>(const BitMask&) const = default;

 private:
  std::vector<std::uint8_t> bits_;
};

class GridDomain {
 public:
  // Requires at least one coordinate and every n_i >= 2.
  explicit GridDomain(std::vector<int> sizes);

  static GridDomain Uniform(int n, int d);
  // The zero-dimensional domain with a single point; only produced by
  // restricting every coordinate of a function.
  static GridDomain SinglePoint();

  int dimension() const { return static_cast<int>(sizes_.size()); }
  int size(int i) const { return sizes_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& sizes() const { return sizes_; }

  bool IsUniform() const;
  // Throws UnsupportedParameter for mixed-radix domains.
  int UniformSize() const;
  bool IsBinary() const;

  // nullopt when the product overflows 64 bits.
  std::optional<std::uint64_t> PointCount() const { return point_count_; }
  // Throws BudgetExceeded when the point count is above `budget`.
  std::uint64_t CheckedPointCount(
      std::uint64_t budget = kDefaultEnumerationBudget) const;

  bool Contains(const GridPoint& p) const;
  // Throws PreconditionError naming the bad coordinate.
  void CheckPoint(const GridPoint& p) const;

  // Row-major, last coordinate fastest. Requires an enumerable domain.
  std::uint64_t IndexOf(const GridPoint& p) const;
  GridPoint PointAt(std::uint64_t index) const;
  std::uint64_t stride(int i) const {
    return strides_[static_cast<std::size_t>(i)];
  }

  // "n=3 d=4" for uniform domains, "[2,3,4]" otherwise.
  std::string ToString() const;

  bool operator==(const GridDomain& other) const {
    return sizes_ == other.sizes_;
  }

 private:
  GridDomain() = default;
  void ComputeStrides();

  std::vector<int> sizes_;
  std::vector<std::uint64_t> strides_;
  std::optional<std::uint64_t> point_count_;
};

// phi_x(a, b): a_i where x_i = 0 and b_i where x_i = 1.
GridPoint Interpolate(const GridPoint& a, const GridPoint& b, const BitMask& x);

// Saturating helpers for sizing enumerations.
std::optional<std::uint64_t> CheckedMul(std::uint64_t a, std::uint64_t b);
std::optional<std::uint64_t> CheckedPow(std::uint64_t base, int exponent);

// Throws BudgetExceeded("<what> needs N units, budget B") when `required`
// (in units of whatever is being enumerated) exceeds `budget`.
void EnforceBudget(const char* what, long double required,
                   std::uint64_t budget);

}  // namespace dsum

#endif  // DSUM_GRID_H_
