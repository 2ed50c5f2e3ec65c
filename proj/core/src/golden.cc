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

#include "dsum/golden.h"

#include <fstream>
#include <regex>

#include "dsum/errors.h"

namespace dsum {

std::vector<GoldenEntry> ReadGolden(std::istream& in) {
  static const std::regex kLine(
      R"(\s*(-?\d+)/(\d+)\s*#\s*(\S+)\s+(\S+)\s*)");
  std::vector<GoldenEntry> out;
  std::string line;
  for (int number = 1; std::getline(in, line); ++number) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::smatch m;
    if (!std::regex_match(line, m, kLine)) {
      throw ConfigError("expected 'p/q  # <test> <function>', got '" + line + "'",
                        "line " + std::to_string(number));
    }
    if (m[2].str().find_first_not_of('0') == std::string::npos) {
      throw ConfigError("zero denominator", "line " + std::to_string(number));
    }
    out.push_back(GoldenEntry{Rational(BigInt(m[1].str()), BigInt(m[2].str())),
                              m[3].str(), m[4].str()});
  }
  return out;
}

std::vector<GoldenEntry> ReadGoldenFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open " + path, path);
  try {
    return ReadGolden(in);
  } catch (const ConfigError& e) {
    throw ConfigError(e.message(), path + ":" + e.location());
  }
}

void WriteGolden(std::ostream& out, const std::vector<GoldenEntry>& entries) {
  for (const auto& e : entries) {
    out << FormatRational(e.value) << "  # " << e.test << " " << e.function
        << "\n";
  }
}

}  // namespace dsum
