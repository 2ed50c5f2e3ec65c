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

// Experiment sweeps: one row per (test, function) cell.
//
// Config files are JSON:
//
//   {
//     "tests":     ["diamond", "square-in-cube"],
//     "functions": ["majority:d=5", "ds:n=2,d=8,seed=1+corrupt:0.05@3"],
//     "mode":      "exact" | "montecarlo" | "auto",
//     "samples":   100000,        // montecarlo / auto fallback
//     "seed":      1,
//     "budget":    4294967296,    // optional enumeration budget
//     "audit":     "frr",         // optional, adds delta / frr_ok
//     "output":    "out.csv",     // optional; stdout when absent
//     "format":    "csv" | "jsonl"
//   }
//
// A function entry "all:d=3" expands to every function on F_2^3 in table
// order. "auto" runs a cell exactly when it fits the budget and by Monte
// Carlo otherwise.

#ifndef DSUM_EXPERIMENT_H_
#define DSUM_EXPERIMENT_H_

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "dsum/grid.h"

namespace dsum {

enum class ExperimentMode { kExact, kMonteCarlo, kAuto };
enum class OutputFormat { kCsv, kJsonLines };

struct ExperimentConfig {
  std::vector<std::string> tests;
  std::vector<std::string> functions;
  ExperimentMode mode = ExperimentMode::kAuto;
  std::uint64_t samples = 100000;
  std::uint64_t seed = 1;
  std::uint64_t budget = kDefaultEnumerationBudget;
  bool frr_audit = false;
  std::string output;
  OutputFormat format = OutputFormat::kCsv;

  // Throws ConfigError with the line (JSON syntax) or field path.
  static ExperimentConfig FromJson(std::string_view text);
  static ExperimentConfig FromFile(const std::string& path);
};

struct ReportRow {
  std::size_t cell = 0;
  std::string test;
  std::string function;
  std::string family;
  int n = 0;
  int d = 0;
  std::string mode;          // "exact" or "montecarlo"
  std::uint64_t samples = 0;  // 0 in exact mode
  std::string rejection;     // "p/q" or a decimal estimate
  std::string half_width;    // empty in exact mode
  std::string void_rate;
  std::string dist_to_class;  // empty when not computable
  std::string ratio;          // dist / rejection
  std::string bits_mean;
  std::string delta;          // frr audit only
  std::string frr_ok;         // frr audit only
  std::uint64_t seed = 0;
};

// Expands "all:..." entries; throws ConfigError on bad ones.
std::vector<std::string> ExpandFunctionEntries(
    const std::vector<std::string>& entries);

// Cells run concurrently, each with BitSource::Derive(seed, cell); rows come
// back in cell order.
std::vector<ReportRow> RunExperiment(const ExperimentConfig& config);

std::vector<std::string> ReportColumns();
void WriteCsv(std::ostream& out, const std::vector<ReportRow>& rows);
void WriteJsonLines(std::ostream& out, const std::vector<ReportRow>& rows);
void WriteReport(std::ostream& out, const std::vector<ReportRow>& rows,
                 OutputFormat format);

}  // namespace dsum

#endif  // DSUM_EXPERIMENT_H_
