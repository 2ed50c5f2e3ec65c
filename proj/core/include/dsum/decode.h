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

// Local correction: recover L(b) for the direct sum L closest to a corrupted
// oracle, by a majority over independently drawn votes.
//
// Shapka vote (d odd, d queries): fresh a, vote sum_i f(phi_{e_i}(a, b)).
// Stays correct with probability >= 3/4 while n * eps * d < 1/4.
//
// Fast vote (n queries for odd n, n + 1 for even n): split the coordinates
// uniformly into parts S_1..S_q (q = n or n + 1); query i copies b on S_i and
// a shared random R elsewhere, and the vote is the sum of the q answers.
// Every R_j contribution appears q - 1 times, an even number, so the vote
// equals L(b) whenever all queries are uncorrupted. R_j avoids b_j for odd n;
// for even n it equals b_j with probability 1/n^2, which makes each query
// uniform on the grid. Correct with probability >= 3/4 while
// (n + 1) * eps < 1/4.

#ifndef DSUM_DECODE_H_
#define DSUM_DECODE_H_

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "dsum/bit_source.h"
#include "dsum/grid.h"
#include "dsum/oracle.h"

namespace dsum {

enum class DecodeScheme { kShapka, kFast };

std::string_view DecodeSchemeName(DecodeScheme scheme);
// "shapka" or "fast"; throws ConfigError.
DecodeScheme ParseDecodeScheme(std::string_view name);

struct DecodeConfig {
  int votes = 101;  // odd
  DecodeScheme scheme = DecodeScheme::kFast;
  // Shapka votes on even d use the extra f(a) term. No correctness bound is
  // known for that variant, so it is off unless asked for.
  bool allow_even_dimension_shapka = false;

  // Throws PreconditionError.
  void Validate(const GridDomain& domain) const;
};

struct DecodeResult {
  bool value = false;
  int ones = 0;
  int zeros = 0;
  int voids = 0;
  // Equal non-void counts (possible only when some votes were erased);
  // `value` is then 0.
  bool tie = false;
  std::uint64_t queries = 0;
};

int QueriesPerVote(DecodeScheme scheme, const GridDomain& domain);

// One vote from explicit randomness, for exhaustive checks. `parts[j]` is
// the part of coordinate j (0-based, < q) and `filler[j]` is R_j.
std::optional<bool> FastVoteFrom(OracleHandle& oracle, const GridPoint& b,
                                 std::span<const int> parts,
                                 const GridPoint& filler);
std::optional<bool> ShapkaVoteFrom(OracleHandle& oracle, const GridPoint& b,
                                   const GridPoint& a);

std::optional<bool> FastSingleVote(OracleHandle& oracle, const GridPoint& b,
                                   BitSource& src);
std::optional<bool> ShapkaSingleVote(OracleHandle& oracle, const GridPoint& b,
                                     BitSource& src);

// Majority of `votes` votes; void votes are dropped. Throws DecodeFailure if
// every vote is void.
DecodeResult ShapkaVote(OracleHandle& oracle, const GridPoint& b, int votes,
                        BitSource& src, bool allow_even_dimension = false);
DecodeResult FastDecode(OracleHandle& oracle, const GridPoint& b, int votes,
                        BitSource& src);
DecodeResult Decode(const DecodeConfig& config, OracleHandle& oracle,
                    const GridPoint& b, BitSource& src);

}  // namespace dsum

#endif  // DSUM_DECODE_H_
