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

// Command-line front end: exact, estimate, bits, fourier, decode, sweep.
//
// Exit codes: 0 success, 2 configuration error, 3 enumeration budget
// refusal, 1 anything else. DSUM_SEED sets the default --seed.

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dsum/bit_source.h"
#include "dsum/decode.h"
#include "dsum/dstt.h"
#include "dsum/errors.h"
#include "dsum/estimate.h"
#include "dsum/exact.h"
#include "dsum/experiment.h"
#include "dsum/fourier.h"
#include "dsum/function_spec.h"
#include "dsum/oracle.h"
#include "dsum/sampling.h"
#include "dsum/testers.h"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitBudget = 3;

std::string Fixed(double v, int digits = 6) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(digits) << v;
  return out.str();
}

dsum::GridPoint ParsePoint(const std::string& text, const dsum::GridDomain& domain) {
  std::vector<int> coords;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      coords.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw dsum::ConfigError("bad coordinate '" + item + "'", "--point");
    }
  }
  dsum::GridPoint p(std::move(coords));
  if (!domain.Contains(p)) {
    throw dsum::ConfigError("point is not in " + domain.ToString(), "--point");
  }
  return p;
}

dsum::QueryPattern ParsePattern(const std::string& test) {
  if (test == "square-in-cube") return dsum::QueryPattern::kSquareInCube;
  if (test == "diamond") return dsum::QueryPattern::kDiamond;
  if (test == "diamond-in-cube") return dsum::QueryPattern::kDiamondInCube;
  throw dsum::ConfigError(
      "bits supports square-in-cube, diamond and diamond-in-cube", test);
}

int RunExact(const std::string& test, const std::string& function,
             std::uint64_t budget) {
  const dsum::TestSpec spec = dsum::ParseTestSpec(test);
  const dsum::BuiltFunction built = dsum::BuildFunction(function, budget);
  const dsum::ExactValue v =
      dsum::ExactRejectionProbability(spec, built.function, budget);
  std::cout << "test:       " << spec.ToString() << "\n"
            << "function:   " << function << "\n"
            << "rejection:  " << v.ToString() << "\n"
            << "decimal:    " << Fixed(v.ToDouble(), 10) << "\n"
            << "provenance: " << v.provenance << "\n";
  return 0;
}

int RunEstimate(const std::string& test, const std::string& function,
                std::uint64_t samples, std::uint64_t seed, int erasures,
                std::uint64_t budget) {
  const dsum::TestSpec spec = dsum::ParseTestSpec(test);
  const dsum::BuiltFunction built = dsum::BuildFunction(function, budget);
  dsum::ErasureOptions erasure;
  if (erasures > 0) {
    erasure.per_query = erasures;
    erasure.strategy = std::make_shared<dsum::AnticipateFourthStrategy>();
  }
  const dsum::Estimate e =
      dsum::EstimateRejection(spec, built.function, samples, seed, erasure);
  std::cout << "test:       " << spec.ToString() << "\n"
            << "function:   " << function << "\n"
            << "samples:    " << e.samples << "\n"
            << "rejection:  " << Fixed(e.value) << " +/- "
            << Fixed(e.half_width) << " (99% Hoeffding)\n"
            << "void_rate:  " << Fixed(e.void_rate) << "\n"
            << "bits_mean:  " << Fixed(e.mean_bits, 3) << "\n"
            << "seed:       " << e.seed << "\n";
  return 0;
}

int RunBits(const std::string& test, int n, int d, std::uint64_t samples,
            std::uint64_t seed) {
  const dsum::BitsReport r =
      dsum::RandomnessReport(ParsePattern(test), n, d, samples, seed);
  std::cout << "pattern:      " << dsum::QueryPatternName(r.pattern) << "\n"
            << "n, d:         " << r.n << ", " << r.d << "\n"
            << "samples:      " << r.samples << "\n"
            << "mean_bits:    " << Fixed(r.mean, 3) << " +/- "
            << Fixed(r.half_width, 3) << "\n"
            << "closed_form:  " << Fixed(r.closed_form, 3) << "\n"
            << "rel_error:    " << Fixed(r.relative_error, 6) << "\n"
            << "seed:         " << seed << "\n";
  return 0;
}

int RunFourier(const std::string& path, std::uint64_t budget) {
  const dsum::BooleanFunction f = dsum::ReadDsttFile(path, budget);
  if (!f.domain().IsBinary()) {
    throw dsum::ConfigError("Fourier analysis needs n = 2", path);
  }
  const dsum::Spectrum s = dsum::WalshHadamard(f);
  const int d = s.dimension();
  std::cout << "# subset coefficient\n";
  for (std::uint64_t mask = 0; mask < s.size(); ++mask) {
    std::string name = "{";
    for (int i = 0; i < d; ++i) {
      if ((mask >> i) & 1u) {
        if (name.size() > 1) name += ",";
        name += std::to_string(i + 1);
      }
    }
    std::cout << name << "} " << dsum::FormatRational(s.Coefficient(mask))
              << "\n";
  }
  std::cout << "max_abs_coefficient: "
            << dsum::FormatRational(s.MaxAbsCoefficient()) << "\n"
            << "dist_to_affine:      "
            << dsum::FormatRational(dsum::DistToAffineFromSpectrum(s)) << "\n"
            << "dist_even_or_odd:    " << dsum::DistEvenOrOdd(f).ToString()
            << "\n"
            << "noise_stability_1/2: " << dsum::NoiseStability(f).ToString()
            << "\n";
  return 0;
}

int RunDecode(const std::string& scheme, const std::string& function,
              const std::string& point, int votes, std::uint64_t seed,
              bool allow_even, std::uint64_t budget) {
  const dsum::BuiltFunction built = dsum::BuildFunction(function, budget);
  const dsum::GridPoint b = ParsePoint(point, built.function.domain());
  dsum::DecodeConfig config;
  config.votes = votes;
  config.scheme = dsum::ParseDecodeScheme(scheme);
  config.allow_even_dimension_shapka = allow_even;
  dsum::OracleHandle oracle(built.function);
  dsum::BitSource src(seed);
  const dsum::DecodeResult r = dsum::Decode(config, oracle, b, src);
  std::cout << "scheme:   " << dsum::DecodeSchemeName(config.scheme) << "\n"
            << "point:    " << b << "\n"
            << "value:    " << (r.value ? 1 : 0) << (r.tie ? " (tie)" : "")
            << "\n"
            << "votes:    " << r.ones << " for 1, " << r.zeros << " for 0, "
            << r.voids << " void\n"
            << "queries:  " << r.queries << "\n";
  if (built.planted) {
    std::cout << "planted:  " << (built.planted->Eval(b) ? 1 : 0) << "\n";
  }
  std::cout << "seed:     " << seed << "\n";
  return 0;
}

int RunSweep(const std::string& path, const std::string& output_override) {
  dsum::ExperimentConfig config = dsum::ExperimentConfig::FromFile(path);
  if (!output_override.empty()) config.output = output_override;
  const auto rows = dsum::RunExperiment(config);
  if (config.output.empty() || config.output == "-") {
    dsum::WriteReport(std::cout, rows, config.format);
  } else {
    std::ofstream out(config.output, std::ios::binary);
    if (!out) throw dsum::ConfigError("cannot write " + config.output, "output");
    dsum::WriteReport(out, rows, config.format);
    std::cerr << rows.size() << " rows written to " << config.output << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Direct-sum testing toolkit"};
  app.require_subcommand(1);
  std::uint64_t seed = 1;
  std::uint64_t budget = dsum::kDefaultEnumerationBudget;
  auto add_seed = [&](CLI::App* sub) {
    sub->add_option("--seed", seed, "Random seed")
        ->envname("DSUM_SEED")
        ->capture_default_str();
  };
  auto add_budget = [&](CLI::App* sub) {
    sub->add_option("--budget", budget, "Enumeration budget")
        ->capture_default_str();
  };

  std::string test, function, path, scheme, point, output;
  std::uint64_t samples = 100000;
  int n = 0, d = 0, votes = 101, erasures = 0;
  bool allow_even = false;

  auto* exact = app.add_subcommand("exact", "Exact rejection probability");
  exact->add_option("test", test, "Test spec")->required();
  exact->add_option("function", function, "Function spec")->required();
  add_budget(exact);

  auto* estimate = app.add_subcommand("estimate", "Monte Carlo rejection estimate");
  estimate->add_option("test", test, "Test spec")->required();
  estimate->add_option("function", function, "Function spec")->required();
  estimate->add_option("--samples", samples, "Number of runs")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  estimate->add_option("--erasures", erasures,
                       "Anticipate-fourth erasures per query")
      ->check(CLI::NonNegativeNumber);
  add_seed(estimate);
  add_budget(estimate);

  auto* bits = app.add_subcommand("bits", "Random bits used by a lazy sampler");
  bits->add_option("test", test, "square-in-cube, diamond or diamond-in-cube")
      ->required();
  bits->add_option("-n", n, "Alphabet size (power of two)")->required();
  bits->add_option("-d", d, "Dimension")->required();
  bits->add_option("--samples", samples, "Number of draws")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  add_seed(bits);

  auto* fourier = app.add_subcommand("fourier", "Spectrum of a DSTT file");
  fourier->add_option("file", path, "DSTT truth table")->required();
  add_budget(fourier);

  auto* decode = app.add_subcommand("decode", "Local correction at one point");
  decode->add_option("scheme", scheme, "shapka or fast")->required();
  decode->add_option("function", function, "Function spec")->required();
  decode->add_option("--point", point, "Comma-separated coordinates")
      ->required();
  decode->add_option("--votes", votes, "Odd number of votes")
      ->capture_default_str();
  decode->add_flag("--allow-even-shapka", allow_even,
                   "Permit the experimental even-d Shapka vote");
  add_seed(decode);
  add_budget(decode);

  auto* sweep = app.add_subcommand("sweep", "Run an experiment config");
  sweep->add_option("config", path, "JSON config file")->required();
  sweep->add_option("--output", output, "Override the output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    if (*exact) return RunExact(test, function, budget);
    if (*estimate) {
      return RunEstimate(test, function, samples, seed, erasures, budget);
    }
    if (*bits) return RunBits(test, n, d, samples, seed);
    if (*fourier) return RunFourier(path, budget);
    if (*decode) {
      return RunDecode(scheme, function, point, votes, seed, allow_even, budget);
    }
    if (*sweep) return RunSweep(path, output);
  } catch (const dsum::BudgetExceeded& e) {
    std::cerr << "budget refused: " << e.what() << "\n";
    return kExitBudget;
  } catch (const dsum::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const dsum::PreconditionError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const dsum::UnsupportedParameter& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
