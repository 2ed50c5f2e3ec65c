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

#include "dsum/truth_table.h"

#include <bit>

#include "dsum/errors.h"

namespace dsum {

TruthTable::TruthTable(std::uint64_t size)
    : size_(size), words_((size + 63) / 64, 0) {}

TruthTable TruthTable::FromString(const std::string& bits) {
  TruthTable t(bits.size());
  for (std::uint64_t i = 0; i < bits.size(); ++i) {
    const char c = bits[i];
    if (c != '0' && c != '1') {
      throw PreconditionError("truth table characters must be 0 or 1");
    }
    if (c == '1') t.Set(i, true);
  }
  return t;
}

std::uint64_t TruthTable::CountOnes() const {
  std::uint64_t c = 0;
  for (auto w : words_) c += static_cast<std::uint64_t>(std::popcount(w));
  return c;
}

std::uint64_t TruthTable::CountDifferences(const TruthTable& other) const {
  if (other.size_ != size_) throw PreconditionError("truth table sizes differ");
  std::uint64_t c = 0;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    c += static_cast<std::uint64_t>(std::popcount(words_[i] ^ other.words_[i]));
  }
  return c;
}

TruthTable& TruthTable::operator^=(const TruthTable& other) {
  if (other.size_ != size_) throw PreconditionError("truth table sizes differ");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
  return *this;
}

std::vector<std::uint8_t> TruthTable::Unpack() const {
  std::vector<std::uint8_t> out(size_);
  for (std::uint64_t i = 0; i < size_; ++i) out[i] = Get(i) ? 1 : 0;
  return out;
}

std::string TruthTable::ToString() const {
  std::string s(size_, '0');
  for (std::uint64_t i = 0; i < size_; ++i) {
    if (Get(i)) s[i] = '1';
  }
  return s;
}

}  // namespace dsum
