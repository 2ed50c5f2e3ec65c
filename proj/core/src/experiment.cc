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

#include "dsum/experiment.h"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <exception>
#include <fstream>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "dsum/bit_source.h"
#include "dsum/distance.h"
#include "dsum/errors.h"
#include "dsum/estimate.h"
#include "dsum/exact.h"
#include "dsum/fourier.h"
#include "dsum/function_spec.h"
#include "dsum/testers.h"

namespace dsum {
namespace {

using nlohmann::json;

std::string Decimal(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

int LineOf(std::string_view text, std::size_t byte) {
  byte = std::min(byte, text.size());
  return 1 + static_cast<int>(std::count(text.begin(), text.begin() + byte, '\n'));
}

std::vector<std::string> StringList(const json& j, const std::string& field) {
  if (!j.is_array() || j.empty()) {
    throw ConfigError(field + " must be a non-empty array of strings", field);
  }
  std::vector<std::string> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string where = field + "[" + std::to_string(i) + "]";
    if (!j[i].is_string()) throw ConfigError("expected a string", where);
    out.push_back(j[i].get<std::string>());
  }
  return out;
}

std::uint64_t Positive(const json& j, const std::string& field,
                       bool allow_zero) {
  if (!j.is_number_unsigned() || (!allow_zero && j.get<std::uint64_t>() == 0)) {
    throw ConfigError(field + " must be a " +
                          (allow_zero ? "non-negative" : "positive") +
                          " integer",
                      field);
  }
  return j.get<std::uint64_t>();
}

// The class the test targets, as a distance; empty when out of reach.
std::string DistanceToClass(const TestSpec& spec, const BooleanFunction& f,
                            std::uint64_t budget, Rational* out) {
  try {
    ExactValue v;
    if (spec.kind == TestKind::kBlrLinearity) return "";
    if (spec.kind == TestKind::kDegree) {
      v = DistToJuntaDegree(f, spec.degree, budget);
    } else if (f.domain().IsBinary() && f.domain().dimension() <= 24) {
      v = DistToDirectSumSpectral(f);
    } else {
      v = DistToDirectSum(f, budget).distance;
    }
    *out = v.value;
    return v.ToString();
  } catch (const BudgetExceeded&) {
    return "";
  } catch (const UnsupportedParameter&) {
    return "";
  }
}

bool FitsExact(const TestSpec& spec, const GridDomain& domain,
               std::uint64_t budget) {
  return RandomnessSpaceSize(spec, domain) <= static_cast<long double>(budget);
}

ReportRow RunCell(const ExperimentConfig& config, std::size_t cell,
                  const std::string& test_text, const std::string& fn_text) {
  const TestSpec spec = ParseTestSpec(test_text);
  const BuiltFunction built = BuildFunction(fn_text, config.budget);
  const BooleanFunction& f = built.function;
  ReportRow row;
  row.cell = cell;
  row.test = spec.ToString();
  row.function = fn_text;
  row.family = built.family;
  row.n = f.domain().IsUniform() ? f.domain().UniformSize() : 0;
  row.d = f.domain().dimension();
  row.seed = BitSource::Derive(config.seed, cell).seed();

  bool exact = config.mode == ExperimentMode::kExact;
  if (config.mode == ExperimentMode::kAuto) {
    exact = FitsExact(spec, f.domain(), config.budget);
  }
  Rational dist = 0;
  row.dist_to_class = DistanceToClass(spec, f, config.budget, &dist);
  if (exact) {
    const ExactValue v = ExactRejectionProbability(spec, f, config.budget);
    row.mode = "exact";
    row.rejection = v.ToString();
    row.void_rate = "0";
    if (!row.dist_to_class.empty() && v.value > 0) {
      row.ratio = FormatRational(dist / v.value);
    }
    if (config.frr_audit && spec.kind == TestKind::kDiamond &&
        f.domain().IsBinary()) {
      const ExactValue delta = ExpectedRestrictedDistance(f, config.budget);
      row.delta = delta.ToString();
      const bool ok = 2 * delta.value <= v.value && v.value <= 4 * delta.value;
      row.frr_ok = ok ? "true" : "false";
    }
  } else {
    const Estimate e = EstimateRejection(spec, f, config.samples, row.seed);
    row.mode = "montecarlo";
    row.samples = e.samples;
    row.rejection = Decimal(e.value);
    row.half_width = Decimal(e.half_width);
    row.void_rate = Decimal(e.void_rate);
    row.bits_mean = Decimal(e.mean_bits);
    if (!row.dist_to_class.empty() && e.value > 0) {
      row.ratio = Decimal(ToDouble(dist) / e.value);
    }
  }
  return row;
}

std::string CsvField(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::vector<std::string> RowFields(const ReportRow& r) {
  return {std::to_string(r.cell), r.test,          r.function,
          r.family,               std::to_string(r.n), std::to_string(r.d),
          r.mode,                 std::to_string(r.samples), r.rejection,
          r.half_width,           r.void_rate,     r.dist_to_class,
          r.ratio,                r.bits_mean,     r.delta,
          r.frr_ok,               std::to_string(r.seed)};
}

}  // namespace

ExperimentConfig ExperimentConfig::FromJson(std::string_view text) {
  json j;
  try {
    j = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("invalid JSON: ") + e.what(),
                      "line " + std::to_string(LineOf(text, e.byte ? e.byte - 1 : 0)));
  }
  if (!j.is_object()) throw ConfigError("config must be a JSON object", "line 1");
  static const std::vector<std::string> kFields = {
      "tests", "functions", "mode",   "samples", "seed",
      "budget", "audit",    "output", "format"};
  for (const auto& [key, value] : j.items()) {
    if (std::find(kFields.begin(), kFields.end(), key) == kFields.end()) {
      throw ConfigError("unknown field '" + key + "'", key);
    }
  }
  ExperimentConfig c;
  if (!j.contains("tests")) throw ConfigError("missing field", "tests");
  if (!j.contains("functions")) throw ConfigError("missing field", "functions");
  c.tests = StringList(j["tests"], "tests");
  for (std::size_t i = 0; i < c.tests.size(); ++i) {
    try {
      ParseTestSpec(c.tests[i]);
    } catch (const ConfigError& e) {
      throw ConfigError(e.message(), "tests[" + std::to_string(i) + "]");
    }
  }
  c.functions = StringList(j["functions"], "functions");
  for (std::size_t i = 0; i < c.functions.size(); ++i) {
    try {
      if (c.functions[i].rfind("all:", 0) == 0) {
        ExpandFunctionEntries({c.functions[i]});
      } else {
        ParseFunctionSpec(c.functions[i]);
      }
    } catch (const ConfigError& e) {
      throw ConfigError(e.message(), "functions[" + std::to_string(i) + "]");
    }
  }
  if (j.contains("mode")) {
    const auto& m = j["mode"];
    const std::string s = m.is_string() ? m.get<std::string>() : "";
    if (s == "exact") {
      c.mode = ExperimentMode::kExact;
    } else if (s == "montecarlo") {
      c.mode = ExperimentMode::kMonteCarlo;
    } else if (s == "auto") {
      c.mode = ExperimentMode::kAuto;
    } else {
      throw ConfigError("mode must be exact, montecarlo or auto", "mode");
    }
  }
  if (j.contains("samples")) c.samples = Positive(j["samples"], "samples", false);
  if (j.contains("seed")) c.seed = Positive(j["seed"], "seed", true);
  if (j.contains("budget")) c.budget = Positive(j["budget"], "budget", false);
  if (j.contains("audit")) {
    if (!j["audit"].is_string() || j["audit"].get<std::string>() != "frr") {
      throw ConfigError("audit must be \"frr\"", "audit");
    }
    c.frr_audit = true;
  }
  if (j.contains("output")) {
    if (!j["output"].is_string()) throw ConfigError("expected a string", "output");
    c.output = j["output"].get<std::string>();
  }
  if (j.contains("format")) {
    const auto& f = j["format"];
    const std::string s = f.is_string() ? f.get<std::string>() : "";
    if (s == "csv") {
      c.format = OutputFormat::kCsv;
    } else if (s == "jsonl") {
      c.format = OutputFormat::kJsonLines;
    } else {
      throw ConfigError("format must be csv or jsonl", "format");
    }
  }
  return c;
}

ExperimentConfig ExperimentConfig::FromFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open " + path, path);
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return FromJson(buf.str());
  } catch (const ConfigError& e) {
    throw ConfigError(e.message(), path + ":" + e.location());
  }
}

std::vector<std::string> ExpandFunctionEntries(
    const std::vector<std::string>& entries) {
  std::vector<std::string> out;
  for (const auto& entry : entries) {
    if (entry.rfind("all:", 0) != 0) {
      out.push_back(entry);
      continue;
    }
    FunctionSpec spec;
    try {
      spec = ParseFunctionSpec("table:" + entry.substr(4) + ",bits=0");
    } catch (const ConfigError& e) {
      throw ConfigError(e.message(), entry);
    }
    if (spec.corrupt) throw ConfigError("all: takes no corruption", entry);
    int d = 0;
    try {
      d = std::stoi(spec.params.at("d"));
    } catch (const std::exception&) {
      throw ConfigError("all: needs an integer d", entry);
    }
    if (spec.params.contains("n") && spec.params.at("n") != "2") {
      throw ConfigError("all: supports n = 2 only", entry);
    }
    if (d < 1 || d > 4) throw ConfigError("all: supports 1 <= d <= 4", entry);
    const std::uint64_t points = std::uint64_t{1} << d;
    for (std::uint64_t t = 0; t < (std::uint64_t{1} << points); ++t) {
      std::string bits(points, '0');
      for (std::uint64_t i = 0; i < points; ++i) {
        if ((t >> i) & 1u) bits[i] = '1';
      }
      out.push_back("table:n=2,d=" + std::to_string(d) + ",bits=" + bits);
    }
  }
  return out;
}

std::vector<ReportRow> RunExperiment(const ExperimentConfig& config) {
  const std::vector<std::string> functions =
      ExpandFunctionEntries(config.functions);
  struct Cell {
    const std::string* test;
    const std::string* function;
  };
  std::vector<Cell> cells;
  for (const auto& fn : functions) {
    for (const auto& test : config.tests) cells.push_back({&test, &fn});
  }
  std::vector<ReportRow> rows(cells.size());
  std::vector<std::exception_ptr> errors(cells.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cells.size(); i = next++) {
      try {
        rows[i] = RunCell(config, i, *cells[i].test, *cells[i].function);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned threads = std::clamp<unsigned>(
      std::thread::hardware_concurrency(), 1u,
      static_cast<unsigned>(std::max<std::size_t>(cells.size(), 1)));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return rows;
}

std::vector<std::string> ReportColumns() {
  return {"cell",          "test",      "function",  "family",   "n",
          "d",             "mode",      "samples",   "rejection", "half_width",
          "void_rate",     "dist_to_class", "ratio", "bits_mean", "delta",
          "frr_ok",        "seed"};
}

void WriteCsv(std::ostream& out, const std::vector<ReportRow>& rows) {
  const auto columns = ReportColumns();
  for (std::size_t i = 0; i < columns.size(); ++i) {
    out << (i ? "," : "") << columns[i];
  }
  out << "\r\n";
  for (const auto& r : rows) {
    const auto fields = RowFields(r);
    for (std::size_t i = 0; i < fields.size(); ++i) {
      out << (i ? "," : "") << CsvField(fields[i]);
    }
    out << "\r\n";
  }
}

void WriteJsonLines(std::ostream& out, const std::vector<ReportRow>& rows) {
  const auto columns = ReportColumns();
  for (const auto& r : rows) {
    const auto fields = RowFields(r);
    nlohmann::ordered_json j;
    for (std::size_t i = 0; i < columns.size(); ++i) {
      const auto& c = columns[i];
      if (c == "cell" || c == "samples" || c == "seed") {
        j[c] = std::stoull(fields[i]);
      } else if (c == "n" || c == "d") {
        j[c] = std::stoi(fields[i]);
      } else {
        j[c] = fields[i];
      }
    }
    out << j.dump() << "\n";
  }
}

void WriteReport(std::ostream& out, const std::vector<ReportRow>& rows,
                 OutputFormat format) {
  if (format == OutputFormat::kCsv) {
    WriteCsv(out, rows);
  } else {
    WriteJsonLines(out, rows);
  }
}

}  // namespace dsum
