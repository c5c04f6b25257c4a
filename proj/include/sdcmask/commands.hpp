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

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "sdcmask/config.hpp"
#include "sdcmask/report.hpp"

namespace sdcmask {

/// Masks `config.target_column` of `config.input_path` and writes the masked
/// dataset to `config.output_path` plus its report (see report_path_for()).
/// Either both files are written or neither is. Returns the report.
MaskReport cmd_mask(const MaskConfig& config);

struct SimulateConfig {
  std::size_t n = 1000;
  double mu = 4.0;
  double sigma_sq = 2.0;
  std::vector<double> alpha_grid{0.999, 0.95, 0.9, 0.8, 0.7};
  Seed seed{20100};
  NoiseMode mode = NoiseMode::kExact;
  std::string outdir = "simulation";
  std::size_t jobs = 1;
  std::size_t histogram_bins = 50;
};

struct SimulationPoint {
  double alpha = 1.0;
  std::vector<double> masked;
  MaskReport report;
  TailExposure tail;
};

struct SimulationResult {
  std::vector<double> original;
  std::vector<SimulationPoint> points;  // in alpha_grid order
};

/// Draws X ~ LN(mu, sigma_sq) and masks it multiplicatively at every alpha of
/// the grid, without touching the filesystem. Every alpha reuses the noise
/// stream "x", so the grid points share one standard normal draw. Results
/// do not depend on `jobs`.
[[nodiscard]] SimulationResult run_simulation(const SimulateConfig& config);

/// run_simulation() plus all output files under config.outdir:
///   original.csv, summary.csv and, per alpha, alpha_<a>/{masked.csv,
///   report.json, density.csv, abs_diff.csv, rank_pairs.csv}.
SimulationResult cmd_simulate(const SimulateConfig& config);

struct ReportRequest {
  std::string original_path;
  std::string masked_path;
  std::string column;
  Method method = Method::kMultiplicative;
  double alpha = 1.0;
  NoiseMode mode = NoiseMode::kExact;
  std::string output_path;  // empty: caller prints the report
};

/// Builds the report for the same column of two CSV files and writes it to
/// output_path when one is given.
MaskReport cmd_report(const ReportRequest& request);

/// Report documents as written to disk: 2-space indented JSON plus newline.
[[nodiscard]] std::string render_report(const MaskReport& report);

/// Directory name for one grid point, e.g. "alpha_0.999".
[[nodiscard]] std::string alpha_label(double alpha);

}  // namespace sdcmask
