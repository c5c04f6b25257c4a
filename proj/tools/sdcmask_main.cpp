// Copyright 2026 The sdcmask Authors
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

// sdcmask: mask confidential numeric columns of a CSV file and report on
// the result.
//
//   sdcmask mask --method multiplicative --alpha 0.95 --column income \
//       --in data.csv --out masked.csv
//   sdcmask simulate --outdir sim
//   sdcmask report --in data.csv --masked masked.csv --column income

#include <cstdlib>
#include <exception>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sdcmask/commands.hpp"
#include "sdcmask/error.hpp"

namespace {

using sdcmask::Errc;
using sdcmask::Error;

constexpr const char* kSeedEnv = "SDCMASK_SEED";
constexpr const char* kOutdirEnv = "SDCMASK_OUTDIR";

std::string exit_code_table() {
  std::ostringstream out;
  out << "Exit codes:\n  0  success\n  1  internal error\n";
  for (Errc code :
       {Errc::kUsage, Errc::kAlphaOutOfRange, Errc::kEmptyColumn,
        Errc::kLengthMismatch, Errc::kZeroVariance, Errc::kNonPositiveValue,
        Errc::kNegativeNoiseVariance, Errc::kDegenerateResidual,
        Errc::kEmptyRequest, Errc::kNonFiniteValue, Errc::kFileNotFound,
        Errc::kMalformedHeader, Errc::kParseError, Errc::kRaggedRows,
        Errc::kColumnNotFound, Errc::kIoError}) {
    const int status = sdcmask::exit_code(code);
    out << (status < 10 ? "  " : " ") << status << "  "
        << sdcmask::to_string(code) << "\n";
  }
  out << "\nErrors are reported on stderr as one line:\n"
         "  error code=<Name> exit=<status> message=\"<text>\"\n"
         "\nEnvironment:\n"
         "  SDCMASK_SEED    default for --seed\n"
         "  SDCMASK_OUTDIR  default for simulate --outdir\n"
         "Flags always take precedence over the environment.";
  return out.str();
}

int report_error(Errc code, const std::string& message) {
  std::string escaped;
  for (char c : message) {
    if (c == '"' || c == '\\') escaped.push_back('\\');
    escaped.push_back(c == '\n' ? ' ' : c);
  }
  const int status = sdcmask::exit_code(code);
  std::cerr << "error code=" << sdcmask::to_string(code) << " exit=" << status
            << " message=\"" << escaped << "\"\n";
  return status;
}

std::uint64_t default_seed(std::uint64_t fallback) {
  const char* env = std::getenv(kSeedEnv);
  if (env == nullptr || *env == '\0') return fallback;
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(env, &used, 10);
    if (used != std::string(env).size()) throw std::invalid_argument(env);
    return v;
  } catch (const std::exception&) {
    throw Error(Errc::kUsage, std::string(kSeedEnv) + " is not an unsigned integer");
  }
}

sdcmask::Method to_method(const std::string& text) {
  if (auto m = sdcmask::parse_method(text)) return *m;
  throw Error(Errc::kUsage, "unknown method: " + text);
}

sdcmask::NoiseMode to_mode(const std::string& text) {
  if (auto m = sdcmask::parse_noise_mode(text)) return *m;
  throw Error(Errc::kUsage, "unknown noise mode: " + text);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mask confidential numeric microdata columns with a selectable "
               "similarity alpha."};
  app.require_subcommand(1);
  app.footer(exit_code_table());

  const std::vector<std::string> methods{"additive", "multiplicative"};
  const std::vector<std::string> modes{"exact", "stochastic"};

  // mask
  sdcmask::MaskConfig mask;
  std::string mask_method = "multiplicative";
  std::string mask_mode = "exact";
  std::string key_column;
  std::uint64_t mask_seed = 0;
  auto* mask_cmd = app.add_subcommand("mask", "Mask one column of a CSV file.");
  mask_cmd->add_option("--method", mask_method, "additive or multiplicative")
      ->check(CLI::IsMember(methods))
      ->capture_default_str();
  mask_cmd->add_option("--alpha", mask.alpha, "Similarity in [0, 1]")
      ->required();
  mask_cmd->add_option("--mode", mask_mode, "exact or stochastic noise")
      ->check(CLI::IsMember(modes))
      ->capture_default_str();
  auto* mask_seed_opt =
      mask_cmd->add_option("--seed", mask_seed, "Noise seed (default 0)");
  mask_cmd->add_option("--column", mask.target_column, "Column to mask")
      ->required();
  auto* key_opt = mask_cmd->add_option(
      "--key-column", key_column,
      "Non-confidential key column (additive method only)");
  mask_cmd->add_option("--in", mask.input_path, "Input CSV")->required();
  mask_cmd->add_option("--out", mask.output_path, "Masked CSV")->required();
  mask_cmd->add_option("--report", mask.report_path,
                       "Report path (default <out>.report.json)");

  // simulate
  sdcmask::SimulateConfig sim;
  std::string sim_mode = "exact";
  auto* sim_cmd = app.add_subcommand(
      "simulate", "Mask a simulated lognormal sample over a grid of alphas.");
  sim_cmd->add_option("--n", sim.n, "Sample size")->capture_default_str();
  sim_cmd->add_option("--mu", sim.mu, "Log-scale mean")->capture_default_str();
  sim_cmd->add_option("--sigma-sq", sim.sigma_sq, "Log-scale variance")
      ->capture_default_str();
  sim_cmd->add_option("--alpha-grid", sim.alpha_grid, "Comma-separated alphas")
      ->delimiter(',')
      ->capture_default_str();
  auto* sim_seed_opt = sim_cmd->add_option("--seed", sim.seed.value, "Seed")
                           ->capture_default_str();
  sim_cmd->add_option("--mode", sim_mode, "exact or stochastic noise")
      ->check(CLI::IsMember(modes))
      ->capture_default_str();
  auto* outdir_opt = sim_cmd->add_option("--outdir", sim.outdir,
                                         "Output directory")
                         ->capture_default_str();
  sim_cmd->add_option("--jobs", sim.jobs, "Worker threads")
      ->capture_default_str();
  sim_cmd->add_option("--bins", sim.histogram_bins, "Histogram bins")
      ->capture_default_str();

  // report
  sdcmask::ReportRequest rep;
  std::string rep_method = "multiplicative";
  std::string rep_mode = "exact";
  auto* rep_cmd = app.add_subcommand(
      "report", "Compare a column of an original and a masked CSV file.");
  rep_cmd->add_option("--in", rep.original_path, "Original CSV")->required();
  rep_cmd->add_option("--masked", rep.masked_path, "Masked CSV")->required();
  rep_cmd->add_option("--column", rep.column, "Column to compare")->required();
  rep_cmd->add_option("--method", rep_method, "Method label for the report")
      ->check(CLI::IsMember(methods))
      ->capture_default_str();
  rep_cmd->add_option("--alpha", rep.alpha, "Alpha label for the report")
      ->capture_default_str();
  rep_cmd->add_option("--mode", rep_mode, "Mode label for the report")
      ->check(CLI::IsMember(modes))
      ->capture_default_str();
  rep_cmd->add_option("--out", rep.output_path,
                      "Report path (default: print to stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return report_error(Errc::kUsage, e.what());
  }

  try {
    if (mask_cmd->parsed()) {
      mask.method = to_method(mask_method);
      mask.mode = to_mode(mask_mode);
      mask.seed.value = mask_seed_opt->count() > 0 ? mask_seed : default_seed(0);
      if (key_opt->count() > 0) mask.key_column = key_column;
      const auto report = sdcmask::cmd_mask(mask);
      std::cout << "masked " << report.n << " values of " << mask.target_column
                << " -> " << mask.output_path << "\n";
    } else if (sim_cmd->parsed()) {
      sim.mode = to_mode(sim_mode);
      if (sim_seed_opt->count() == 0) sim.seed.value = default_seed(sim.seed.value);
      if (outdir_opt->count() == 0) {
        if (const char* env = std::getenv(kOutdirEnv); env && *env) {
          sim.outdir = env;
        }
      }
      const auto result = sdcmask::cmd_simulate(sim);
      std::cout << "alpha,pearson_xy,spearman_xy,rank_swaps\n";
      for (const auto& p : result.points) {
        std::cout << p.alpha << "," << p.report.pearson_xy.value_or(0.0) << ","
                  << p.report.spearman_xy.value_or(0.0) << ","
                  << p.report.rank_swaps << "\n";
      }
    } else if (rep_cmd->parsed()) {
      rep.method = to_method(rep_method);
      rep.mode = to_mode(rep_mode);
      const auto report = sdcmask::cmd_report(rep);
      if (rep.output_path.empty()) std::cout << sdcmask::render_report(report);
    }
  } catch (const Error& e) {
    return report_error(e.code(), e.what());
  } catch (const std::exception& e) {
    std::cerr << "error code=Internal exit=1 message=\"" << e.what() << "\"\n";
    return 1;
  }
  return 0;
}
