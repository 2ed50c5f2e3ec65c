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

#ifndef DSUM_TRUTH_TABLE_H_
#define DSUM_TRUTH_TABLE_H_

#include <cstdint>
#include <string>
#include <vector>

namespace dsum {

// Bit-packed table of `size` values over F_2, 64 per word.
class TruthTable {
 public:
  TruthTable() = default;
  explicit TruthTable(std::uint64_t size);

  // From a {0,1} string; throws PreconditionError on other characters.
  static TruthTable FromString(const std::string& bits);

  std::uint64_t size() const { return size_; }
  bool Get(std::uint64_t i) const {
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }
  void Set(std::uint64_t i, bool v) {
    const std::uint64_t m = std::uint64_t{1} << (i & 63);
    if (v) {
      words_[i >> 6] |= m;
    } else {
      words_[i >> 6] &= ~m;
    }
  }
  void Flip(std::uint64_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  std::uint64_t CountOnes() const;
  // Hamming distance; sizes must match.
  std::uint64_t CountDifferences(const TruthTable& other) const;
  TruthTable& operator^=(const TruthTable& other);

  // One byte per entry, handy for tight enumeration loops.
  std::vector<std::uint8_t> Unpack() const;
  std::string ToString() const;

  const std::vector<std::uint64_t>& words() const { return words_; }

  bool operator==(const TruthTable& other) const = default;

 private:
  std::uint64_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace dsum

#endif  // DSUM_TRUTH_TABLE_H_
