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
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "sdcmask/config.hpp"
#include "sdcmask/multiplicative.hpp"
#include "sdcmask/stats.hpp"

namespace sdcmask {

struct AbsDiffPoint {
  std::size_t original_rank_index = 0;  // 1-based rank of x_i
  double abs_diff = 0.0;                // |y_i - x_i|
};

/// Utility and risk diagnostics for one (original, masked) column pair.
///
/// Correlations and skewness are undefined for constant columns and are
/// left empty there. Log-scale fields need strictly positive data on both
/// sides; pearson_log_xy and ks_stat_log are filled for the
/// multiplicative method only.
struct MaskReport {
  std::string method;
  double alpha = 1.0;
  std::string mode;
  std::size_t n = 0;
  MomentSummary raw_moments_original;
  MomentSummary raw_moments_masked;
  std::optional<LognormalParams> log_params_original;
  std::optional<LognormalParams> log_params_masked;
  std::optional<double> pearson_xy;
  std::optional<double> spearman_xy;
  std::optional<double> pearson_log_xy;
  std::size_t rank_swaps = 0;
  std::optional<double> skewness_original;
  std::optional<double> skewness_masked;
  std::optional<double> ks_stat_log;
  // Ordered by ascending original value.
  std::vector<AbsDiffPoint> abs_diff_series;
};

[[nodiscard]] MaskReport build_report(std::span<const double> x,
                                      std::span<const double> y,
                                      const MaskConfig& config);

/// Field names match MaskReport member names; absent values are null.
[[nodiscard]] nlohmann::ordered_json to_json(const MaskReport& report);

/// One-sample Kolmogorov-Smirnov statistic of ln y against
/// N(reference.mu, reference.sigma_sq):
///   D = max_i max(i/n - F(v_(i)), F(v_(i)) - (i-1)/n)
/// over the sorted logs v. A zero-variance reference gives 0 when every
/// ln y_i equals mu and 1 otherwise. Throws NonPositiveValue.
[[nodiscard]] double ks_log_normality(std::span<const double> y,
                                      const LognormalParams& reference);

struct TailExposure {
  double mean_abs_perturbation_top = 0.0;
  double mean_abs_perturbation_rest = 0.0;
};

inline constexpr double kDefaultTopFraction = 0.05;

/// Mean |y_i - x_i| over the ceil(top_fraction n) largest original values
/// and over the rest. The top group always has at least one and at most
/// n - 1 members, so n >= 2 is required.
[[nodiscard]] TailExposure tail_exposure(
    std::span<const double> x, std::span<const double> y,
    double top_fraction = kDefaultTopFraction);

struct HistogramBin {
  double lower = 0.0;
  double upper = 0.0;
  double density_original = 0.0;
  double density_masked = 0.0;
};

/// Shared-bin density histograms of x and y over [min x, q x], where q is
/// the `upper_quantile` empirical quantile of x. Values outside the range
/// are counted in n but fall in no bin, so densities integrate to the
/// in-range share.
[[nodiscard]] std::vector<HistogramBin> density_histogram(
    std::span<const double> x, std::span<const double> y, std::size_t bins,
    double upper_quantile = 0.99);

}  // namespace sdcmask
