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

#include "dsum/dstt.h"

#include <cmath>
#include <fstream>
#include <regex>

#include "dsum/errors.h"

namespace dsum {

BooleanFunction ReadDstt(std::istream& in, std::uint64_t budget) {
  std::string header;
  if (!std::getline(in, header) || in.eof()) {
    throw ConfigError("missing or unterminated header", "line 1");
  }
  static const std::regex kHeader(R"(n=(\d+) d=(\d+))");
  std::smatch m;
  if (!std::regex_match(header, m, kHeader)) {
    throw ConfigError("expected 'n=<int> d=<int>', got '" + header + "'",
                      "line 1");
  }
  int n = 0, d = 0;
  try {
    n = std::stoi(m[1].str());
    d = std::stoi(m[2].str());
  } catch (const std::out_of_range&) {
    throw ConfigError("header value out of range", "line 1");
  }
  if (n < 2 || d < 1) throw ConfigError("need n >= 2 and d >= 1", "line 1");
  const GridDomain domain = GridDomain::Uniform(n, d);
  const auto count = domain.PointCount();
  if (!count) throw BudgetExceeded("truth table", std::pow(1.0L * n, d), budget);
  EnforceBudget("truth table", static_cast<long double>(*count), budget);

  std::string bits;
  if (!std::getline(in, bits) || in.eof()) {
    throw ConfigError("missing or unterminated table line", "line 2");
  }
  if (bits.size() != *count) {
    throw ConfigError("table has " + std::to_string(bits.size()) +
                          " characters, expected " + std::to_string(*count),
                      "line 2");
  }
  TruthTable table(*count);
  for (std::uint64_t i = 0; i < *count; ++i) {
    const char c = bits[i];
    if (c != '0' && c != '1') {
      throw ConfigError("non-binary character at column " +
                            std::to_string(i + 1),
                        "line 2");
    }
    if (c == '1') table.Set(i, true);
  }
  std::string rest;
  while (std::getline(in, rest)) {
    if (!rest.empty()) throw ConfigError("unexpected trailing data", "line 3");
  }
  return BooleanFunction::FromTable(domain, std::move(table));
}

BooleanFunction ReadDsttFile(const std::string& path, std::uint64_t budget) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open " + path, path);
  try {
    return ReadDstt(in, budget);
  } catch (const ConfigError& e) {
    throw ConfigError(e.message(), path + ":" + e.location());
  }
}

void WriteDstt(std::ostream& out, const BooleanFunction& f,
               std::uint64_t budget) {
  const GridDomain& domain = f.domain();
  if (!domain.IsUniform() || domain.dimension() < 1) {
    throw PreconditionError("DSTT files need a uniform grid");
  }
  out << "n=" << domain.UniformSize() << " d=" << domain.dimension() << "\n"
      << f.Tabulate(budget).ToString() << "\n";
}

void WriteDsttFile(const std::string& path, const BooleanFunction& f) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write " + path, path);
  WriteDstt(out, f);
}

}  // namespace dsum
