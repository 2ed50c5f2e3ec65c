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

// "DSTT v1" truth-table files:
//
//   n=<int> d=<int>\n
//   <n^d characters from {0,1}, row-major, last coordinate fastest>\n
//
// ASCII, exactly two newline-terminated lines.

#ifndef DSUM_DSTT_H_
#define DSUM_DSTT_H_

#include <istream>
#include <ostream>
#include <string>

#include "dsum/boolean_function.h"

namespace dsum {

// Throws ConfigError (with a "line N" location) on malformed input.
BooleanFunction ReadDstt(std::istream& in,
                         std::uint64_t budget = kDefaultEnumerationBudget);
BooleanFunction ReadDsttFile(const std::string& path,
                             std::uint64_t budget = kDefaultEnumerationBudget);

// Requires a uniform domain.
void WriteDstt(std::ostream& out, const BooleanFunction& f,
               std::uint64_t budget = kDefaultEnumerationBudget);
void WriteDsttFile(const std::string& path, const BooleanFunction& f);

}  // namespace dsum

#endif  // DSUM_DSTT_H_
