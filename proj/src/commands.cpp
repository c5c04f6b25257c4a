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

#include "sdcmask/commands.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <future>
#include <utility>

#include "sdcmask/additive.hpp"
#include "sdcmask/dataset.hpp"
#include "sdcmask/error.hpp"
#include "sdcmask/multiplicative.hpp"

namespace sdcmask {

namespace {

namespace fs = std::filesystem;

using FileList = std::vector<std::pair<std::string, std::string>>;

void validate(const SimulateConfig& c) {
  if (c.n < 2) throw Error(Errc::kUsage, "simulation needs n >= 2");
  if (!(c.sigma_sq >= 0.0) || !std::isfinite(c.sigma_sq) ||
      !std::isfinite(c.mu)) {
    throw Error(Errc::kUsage, "simulation needs finite mu and sigma_sq >= 0");
  }
  if (c.alpha_grid.empty()) throw Error(Errc::kUsage, "empty alpha grid");
  for (double a : c.alpha_grid) {
    if (!(a >= 0.0 && a <= 1.0)) {
      throw Error(Errc::kAlphaOutOfRange,
                  "alpha must lie in [0, 1], got " + std::to_string(a));
    }
  }
  if (c.jobs == 0) throw Error(Errc::kUsage, "jobs must be at least 1");
  if (c.histogram_bins == 0) throw Error(Errc::kUsage, "bins must be >= 1");
  if (c.outdir.empty()) throw Error(Errc::kUsage, "no output directory given");
}

SimulationPoint simulate_point(std::span<const double> x, double alpha,
                               const SimulateConfig& config) {
  const ColumnVector y =
      mask_multiplicative(x, alpha, config.seed, config.mode, "x");
  MaskConfig mc;
  mc.method = Method::kMultiplicative;
  mc.alpha = alpha;
  mc.mode = config.mode;
  mc.seed = config.seed;
  return {alpha, {y.begin(), y.end()}, build_report(x, y, mc),
          tail_exposure(x, y)};
}

std::string csv_line(std::initializer_list<std::string> fields) {
  std::string out;
  for (const auto& f : fields) {
    if (!out.empty()) out.push_back(',');
    out += f;
  }
  out.push_back('\n');
  return out;
}

std::string optional_real(const std::optional<double>& v) {
  return v ? format_real(*v) : std::string();
}

std::string single_column_csv(std::string_view name,
                              std::span<const double> values) {
  std::string out = "id," + std::string(name) + "\n";
  for (std::size_t i = 0; i < values.size(); ++i) {
    out += csv_line({std::to_string(i + 1), format_real(values[i])});
  }
  return out;
}

struct PointFiles {
  std::string masked_csv;
  std::string report_json;
  std::string density_csv;
  std::string abs_diff_csv;
  std::string rank_pairs_csv;
};

PointFiles render_point(std::span<const double> x, std::span<const double> y,
                        const SimulationPoint& point, std::size_t bins) {
  PointFiles files;
  files.masked_csv = single_column_csv("x", y);
  files.report_json = render_report(point.report);

  files.density_csv = "bin_lower,bin_upper,density_original,density_masked\n";
  for (const auto& b : density_histogram(x, y, bins)) {
    files.density_csv +=
        csv_line({format_real(b.lower), format_real(b.upper),
                  format_real(b.density_original), format_real(b.density_masked)});
  }

  std::vector<std::size_t> order(x.size());
  const auto rx = ranks(x);
  for (std::size_t i = 0; i < x.size(); ++i) order[rx[i] - 1] = i;
  files.abs_diff_csv = "original_rank_index,original,masked,abs_diff\n";
  for (std::size_t k = 0; k < order.size(); ++k) {
    const std::size_t i = order[k];
    files.abs_diff_csv +=
        csv_line({std::to_string(k + 1), format_real(x[i]), format_real(y[i]),
                  format_real(point.report.abs_diff_series[k].abs_diff)});
  }

  const auto ry = ranks(y);
  files.rank_pairs_csv = "id,original_rank,masked_rank\n";
  for (std::size_t i = 0; i < x.size(); ++i) {
    files.rank_pairs_csv += csv_line(
        {std::to_string(i + 1), std::to_string(rx[i]), std::to_string(ry[i])});
  }
  return files;
}

}  // namespace

std::string render_report(const MaskReport& report) {
  return to_json(report).dump(2) + "\n";
}

std::string alpha_label(double alpha) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, alpha);
  return "alpha_" + std::string(buf, ptr);
}

MaskReport cmd_mask(const MaskConfig& config) {
  validate(config);
  if (config.input_path.empty() || config.output_path.empty()) {
    throw Error(Errc::kUsage, "mask needs both an input and an output path");
  }
  Dataset data = load_csv(config.input_path);
  const ColumnVector x = data.numeric_column(config.target_column);
  const std::string label = "mask/" + config.target_column;

  ColumnVector y = x;
  if (config.method == Method::kAdditive) {
    const ColumnVector s = data.numeric_column(*config.key_column);
    y = mask_additive(x, s, config.alpha, config.seed, config.mode, label);
  } else {
    y = mask_multiplicative(x, config.alpha, config.seed, config.mode, label);
  }

  const MaskReport report = build_report(x, y, config);
  // alpha == 1 leaves the column alone, so its bytes survive unchanged.
  if (config.alpha != 1.0) data.set_numeric_column(config.target_column, y);

  const FileList files{{config.output_path, data.to_csv()},
                       {report_path_for(config), render_report(report)}};
  write_files_atomic(files);
  return report;
}

SimulationResult run_simulation(const SimulateConfig& config) {
  validate(config);
  const ColumnVector z = standard_normals(config.seed, "simulate/x", config.n);
  const double sd = std::sqrt(config.sigma_sq);
  SimulationResult result;
  result.original.resize(config.n);
  for (std::size_t i = 0; i < config.n; ++i) {
    result.original[i] = std::exp(config.mu + sd * z[i]);
  }

  const auto& grid = config.alpha_grid;
  result.points.resize(grid.size());
  const std::size_t workers = std::min(config.jobs, grid.size());
  std::vector<std::future<void>> tasks;
  for (std::size_t w = 0; w < workers; ++w) {
    tasks.push_back(std::async(std::launch::async, [&, w] {
      for (std::size_t k = w; k < grid.size(); k += workers) {
        result.points[k] = simulate_point(result.original, grid[k], config);
      }
    }));
  }
  for (auto& t : tasks) t.get();
  return result;
}

SimulationResult cmd_simulate(const SimulateConfig& config) {
  SimulationResult result = run_simulation(config);
  const fs::path root(config.outdir);
  const std::span<const double> x = result.original;

  FileList files;
  files.emplace_back((root / "original.csv").string(),
                     single_column_csv("x", x));

  std::string summary =
      "alpha,pearson_xy,spearman_xy,pearson_log_xy,rank_swaps,"
      "mean_abs_perturbation_top,mean_abs_perturbation_rest,ks_stat_log\n";
  for (const auto& point : result.points) {
    const auto& r = point.report;
    summary += csv_line(
        {format_real(point.alpha), optional_real(r.pearson_xy),
         optional_real(r.spearman_xy), optional_real(r.pearson_log_xy),
         std::to_string(r.rank_swaps),
         format_real(point.tail.mean_abs_perturbation_top),
         format_real(point.tail.mean_abs_perturbation_rest),
         optional_real(r.ks_stat_log)});

    const fs::path dir = root / alpha_label(point.alpha);
    PointFiles pf = render_point(x, point.masked, point, config.histogram_bins);
    files.emplace_back((dir / "masked.csv").string(), std::move(pf.masked_csv));
    files.emplace_back((dir / "report.json").string(), std::move(pf.report_json));
    files.emplace_back((dir / "density.csv").string(), std::move(pf.density_csv));
    files.emplace_back((dir / "abs_diff.csv").string(),
                       std::move(pf.abs_diff_csv));
    files.emplace_back((dir / "rank_pairs.csv").string(),
                       std::move(pf.rank_pairs_csv));
  }
  files.emplace_back((root / "summary.csv").string(), std::move(summary));

  std::error_code ec;
  for (const auto& point : result.points) {
    fs::create_directories(root / alpha_label(point.alpha), ec);
    if (ec) {
      throw Error(Errc::kIoError,
                  "cannot create " + root.string() + ": " + ec.message());
    }
  }
  write_files_atomic(files);
  return result;
}

MaskReport cmd_report(const ReportRequest& request) {
  if (!(request.alpha >= 0.0 && request.alpha <= 1.0)) {
    throw Error(Errc::kAlphaOutOfRange, "alpha must lie in [0, 1]");
  }
  if (request.column.empty()) throw Error(Errc::kUsage, "no column given");
  const ColumnVector x =
      load_csv(request.original_path).numeric_column(request.column);
  const ColumnVector y =
      load_csv(request.masked_path).numeric_column(request.column);
  MaskConfig mc;
  mc.method = request.method;
  mc.alpha = request.alpha;
  mc.mode = request.mode;
  const MaskReport report = build_report(x, y, mc);
  if (!request.output_path.empty()) {
    const FileList files{{request.output_path, render_report(report)}};
    write_files_atomic(files);
  }
  return report;
}

}  // namespace sdcmask
