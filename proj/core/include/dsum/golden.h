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

// Golden-fixture files: one exact value per line,
//
//   <numerator>/<denominator>  # <test> <function-spec>
//
// Blank lines and lines starting with '#' are ignored.

#ifndef DSUM_GOLDEN_H_
#define DSUM_GOLDEN_H_

#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "dsum/rational.h"

namespace dsum {

struct GoldenEntry {
  Rational value;
  std::string test;
  std::string function;
};

// Throws ConfigError with a "line N" location on malformed lines.
std::vector<GoldenEntry> ReadGolden(std::istream& in);
std::vector<GoldenEntry> ReadGoldenFile(const std::string& path);
void WriteGolden(std::ostream& out, const std::vector<GoldenEntry>& entries);

}  // namespace dsum

#endif  // DSUM_GOLDEN_H_
