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

#ifndef DSUM_BIT_SOURCE_H_
#define DSUM_BIT_SOURCE_H_

#include <cstdint>
#include <random>

namespace dsum {

// A seeded stream of fair bits that counts exactly how many it hands out.
//
// Every draw is built from raw bits of the stream, so `bits_consumed` is the
// true randomness cost of whatever was sampled:
//   * Bit() costs 1, Bits(k) costs k.
//   * Uniform(n) costs exactly log2(n) bits when n is a power of two, and
//     ceil(log2 n) bits per attempt of rejection sampling otherwise.
//   * Bernoulli(p) compares the binary expansion of p against fresh bits and
//     stops at the first difference (2 bits in expectation).
//
// Not thread-safe; give each thread its own source (see Derive).
class BitSource {
 public:
  explicit BitSource(std::uint64_t seed);

  // Independent stream for (master seed, stream index), used to give sweep
  // cells and worker chunks their own sources.
  static BitSource Derive(std::uint64_t master_seed, std::uint64_t stream);

  std::uint64_t seed() const { return seed_; }
  std::uint64_t bits_consumed() const { return consumed_; }

  bool Bit();
  // 0 <= count <= 64.
  std::uint64_t Bits(int count);
  // Uniform on {0, ..., n-1}; n >= 1.
  int Uniform(int n);
  bool Bernoulli(double p);

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
  std::uint64_t buffer_ = 0;
  int available_ = 0;
  std::uint64_t consumed_ = 0;
};

std::uint64_t SplitMix64(std::uint64_t x);

}  // namespace dsum

#endif  // DSUM_BIT_SOURCE_H_
