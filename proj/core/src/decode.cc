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

#include "dsum/decode.h"

#include "dsum/errors.h"
#include "dsum/sampling.h"

namespace dsum {
namespace {

int FastParts(const GridDomain& domain) {
  if (!domain.IsUniform() || domain.dimension() < 1) {
    throw PreconditionError("fast decoding needs a uniform grid with d >= 1");
  }
  const int n = domain.UniformSize();
  return n % 2 == 1 ? n : n + 1;
}

void CheckVotes(int votes) {
  if (votes < 1 || votes % 2 == 0) {
    throw PreconditionError("vote count must be odd and positive, got " +
                            std::to_string(votes));
  }
}

template <typename SingleVote>
DecodeResult Majority(OracleHandle& oracle, int votes, SingleVote vote) {
  CheckVotes(votes);
  const std::uint64_t start = oracle.query_count();
  DecodeResult r;
  for (int i = 0; i < votes; ++i) {
    oracle.BeginRun();
    const std::optional<bool> v = vote();
    if (!v) {
      ++r.voids;
    } else if (*v) {
      ++r.ones;
    } else {
      ++r.zeros;
    }
  }
  r.queries = oracle.query_count() - start;
  if (r.voids == votes) throw DecodeFailure("every vote was erased");
  r.tie = r.ones == r.zeros;
  r.value = r.ones > r.zeros;
  return r;
}

}  // namespace

std::string_view DecodeSchemeName(DecodeScheme scheme) {
  return scheme == DecodeScheme::kShapka ? "shapka" : "fast";
}

DecodeScheme ParseDecodeScheme(std::string_view name) {
  if (name == "shapka") return DecodeScheme::kShapka;
  if (name == "fast") return DecodeScheme::kFast;
  throw ConfigError("unknown decode scheme '" + std::string(name) + "'",
                    "scheme");
}

void DecodeConfig::Validate(const GridDomain& domain) const {
  CheckVotes(votes);
  if (domain.dimension() < 1) throw PreconditionError("decoding needs d >= 1");
  if (scheme == DecodeScheme::kFast) {
    FastParts(domain);
  } else if (domain.dimension() % 2 == 0 && !allow_even_dimension_shapka) {
    throw PreconditionError(
        "Shapka decoding needs odd d; even d is experimental and must be "
        "enabled explicitly");
  }
}

int QueriesPerVote(DecodeScheme scheme, const GridDomain& domain) {
  if (scheme == DecodeScheme::kFast) return FastParts(domain);
  const int d = domain.dimension();
  return d % 2 == 1 ? d : d + 1;
}

std::optional<bool> FastVoteFrom(OracleHandle& oracle, const GridPoint& b,
                                 std::span<const int> parts,
                                 const GridPoint& filler) {
  const GridDomain& domain = oracle.domain();
  const int q = FastParts(domain);
  const int d = domain.dimension();
  domain.CheckPoint(b);
  domain.CheckPoint(filler);
  if (static_cast<int>(parts.size()) != d) {
    throw PreconditionError("need one part label per coordinate");
  }
  for (int p : parts) {
    if (p < 0 || p >= q) throw PreconditionError("part label out of range");
  }
  bool vote = false;
  bool erased = false;
  for (int i = 0; i < q; ++i) {
    GridPoint x = filler;
    for (int j = 0; j < d; ++j) {
      if (parts[static_cast<std::size_t>(j)] == i) x[j] = b[j];
    }
    const Answer a = oracle.Query(x);
    if (!a) {
      erased = true;
    } else {
      vote ^= *a;
    }
  }
  if (erased) return std::nullopt;
  return vote;
}

std::optional<bool> ShapkaVoteFrom(OracleHandle& oracle, const GridPoint& b,
                                   const GridPoint& a) {
  const GridDomain& domain = oracle.domain();
  domain.CheckPoint(a);
  domain.CheckPoint(b);
  const int d = domain.dimension();
  bool vote = false;
  bool erased = false;
  auto ask = [&](const GridPoint& p) {
    const Answer ans = oracle.Query(p);
    if (!ans) {
      erased = true;
    } else {
      vote ^= *ans;
    }
  };
  for (int i = 0; i < d; ++i) {
    GridPoint h = a;
    h[i] = b[i];
    ask(h);
  }
  if (d % 2 == 0) ask(a);
  if (erased) return std::nullopt;
  return vote;
}

std::optional<bool> FastSingleVote(OracleHandle& oracle, const GridPoint& b,
                                   BitSource& src) {
  const GridDomain& domain = oracle.domain();
  const int q = FastParts(domain);
  const int n = domain.UniformSize();
  const int d = domain.dimension();
  std::vector<int> parts(static_cast<std::size_t>(d));
  GridPoint filler = b;
  for (int j = 0; j < d; ++j) {
    parts[static_cast<std::size_t>(j)] = src.Uniform(q);
    if (n % 2 == 0 && src.Uniform(n * n) == 0) {
      filler[j] = b[j];
    } else {
      // Uniform over the n - 1 values other than b_j.
      const int v = src.Uniform(n - 1);
      filler[j] = v >= b[j] ? v + 1 : v;
    }
  }
  return FastVoteFrom(oracle, b, parts, filler);
}

std::optional<bool> ShapkaSingleVote(OracleHandle& oracle, const GridPoint& b,
                                     BitSource& src) {
  return ShapkaVoteFrom(oracle, b, SampleUniformPoint(oracle.domain(), src));
}

DecodeResult ShapkaVote(OracleHandle& oracle, const GridPoint& b, int votes,
                        BitSource& src, bool allow_even_dimension) {
  DecodeConfig config{votes, DecodeScheme::kShapka, allow_even_dimension};
  config.Validate(oracle.domain());
  return Majority(oracle, votes,
                  [&] { return ShapkaSingleVote(oracle, b, src); });
}

DecodeResult FastDecode(OracleHandle& oracle, const GridPoint& b, int votes,
                        BitSource& src) {
  DecodeConfig config{votes, DecodeScheme::kFast, false};
  config.Validate(oracle.domain());
  return Majority(oracle, votes,
                  [&] { return FastSingleVote(oracle, b, src); });
}

DecodeResult Decode(const DecodeConfig& config, OracleHandle& oracle,
                    const GridPoint& b, BitSource& src) {
  config.Validate(oracle.domain());
  if (config.scheme == DecodeScheme::kFast) {
    return FastDecode(oracle, b, config.votes, src);
  }
  return ShapkaVote(oracle, b, config.votes, src,
                    config.allow_even_dimension_shapka);
}

}  // namespace dsum
