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

#include "dsum/bit_source.h"

#include <bit>

#include "dsum/errors.h"

namespace dsum {

std::uint64_t SplitMix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

BitSource::BitSource(std::uint64_t seed) : seed_(seed), engine_(seed) {}

BitSource BitSource::Derive(std::uint64_t master_seed, std::uint64_t stream) {
  return BitSource(SplitMix64(SplitMix64(master_seed) ^ SplitMix64(~stream)));
}

bool BitSource::Bit() {
  if (available_ == 0) {
    buffer_ = engine_();
    available_ = 64;
  }
  const bool b = buffer_ & 1u;
  buffer_ >>= 1;
  --available_;
  ++consumed_;
  return b;
}

std::uint64_t BitSource::Bits(int count) {
  if (count < 0 || count > 64) throw PreconditionError("Bits: count must be in [0, 64]");
  std::uint64_t r = 0;
  int filled = 0;
  while (filled < count) {
    if (available_ == 0) {
      buffer_ = engine_();
      available_ = 64;
    }
    const int take = std::min(count - filled, available_);
    const std::uint64_t mask =
        take == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << take) - 1);
    r |= (buffer_ & mask) << filled;
    buffer_ = take == 64 ? 0 : buffer_ >> take;
    available_ -= take;
    filled += take;
  }
  consumed_ += static_cast<std::uint64_t>(count);
  return r;
}

int BitSource::Uniform(int n) {
  if (n < 1) throw PreconditionError("Uniform: n must be positive");
  if (n == 1) return 0;
  const auto un = static_cast<std::uint64_t>(n);
  const int width = std::bit_width(un - 1);
  if (std::has_single_bit(un)) return static_cast<int>(Bits(width));
  for (;;) {
    const std::uint64_t v = Bits(width);
    if (v < un) return static_cast<int>(v);
  }
}

bool BitSource::Bernoulli(double p) {
  if (!(p > 0.0)) return false;
  if (p >= 1.0) return true;
  // Compare a uniform U = 0.u1u2... against the binary expansion of p; the
  // first differing digit decides U < p.
  for (;;) {
    p *= 2.0;
    const int digit = p >= 1.0 ? 1 : 0;
    if (digit) p -= 1.0;
    const int u = Bit() ? 1 : 0;
    if (u < digit) return true;
    if (u > digit) return false;
  }
}

}  // namespace dsum
