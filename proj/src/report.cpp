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

#include "sdcmask/report.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "sdcmask/error.hpp"

namespace sdcmask {

namespace {

bool all_positive(std::span<const double> v) {
  return std::all_of(v.begin(), v.end(), [](double e) { return e > 0.0; });
}

template <typename F>
std::optional<double> if_defined(F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    if (e.code() == Errc::kZeroVariance) return std::nullopt;
    throw;
  }
}

nlohmann::ordered_json moments_json(const MomentSummary& m) {
  return {{"mean", m.mean}, {"variance", m.variance}, {"n", m.n}};
}

template <typename T, typename F>
nlohmann::ordered_json optional_json(const std::optional<T>& v, F&& convert) {
  if (!v) return nullptr;
  return convert(*v);
}

nlohmann::ordered_json optional_json(const std::optional<double>& v) {
  if (!v) return nullptr;
  return *v;
}

nlohmann::ordered_json params_json(const LognormalParams& p) {
  return {{"mu", p.mu}, {"sigma_sq", p.sigma_sq}};
}

double normal_cdf(double v, double mu, double sd) {
  return 0.5 * std::erfc(-(v - mu) / (sd * std::numbers::sqrt2));
}

}  // namespace

MaskReport build_report(std::span<const double> x, std::span<const double> y,
                        const MaskConfig& config) {
  if (x.size() != y.size()) {
    throw Error(Errc::kLengthMismatch,
                "original and masked columns differ in length");
  }
  MaskReport r;
  r.method = std::string(to_string(config.method));
  r.alpha = config.alpha;
  r.mode = std::string(to_string(config.mode));
  r.n = x.size();
  r.raw_moments_original = moments(x);
  r.raw_moments_masked = moments(y);
  r.pearson_xy = if_defined([&] { return pearson(x, y); });
  r.spearman_xy = if_defined([&] { return spearman(x, y); });
  r.rank_swaps = rank_swap_count(x, y);
  r.skewness_original = if_defined([&] { return skewness(x); });
  r.skewness_masked = if_defined([&] { return skewness(y); });

  if (all_positive(x) && all_positive(y)) {
    r.log_params_original = estimate_log_params(x);
    r.log_params_masked = estimate_log_params(y);
    if (config.method == Method::kMultiplicative) {
      const auto lx = log_values(x);
      const auto ly = log_values(y);
      r.pearson_log_xy = if_defined([&] { return pearson(lx, ly); });
      r.ks_stat_log = ks_log_normality(y, *r.log_params_original);
    }
  }

  const auto rx = ranks(x);
  r.abs_diff_series.resize(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    r.abs_diff_series[rx[i] - 1] = {rx[i], std::abs(y[i] - x[i])};
  }
  return r;
}

nlohmann::ordered_json to_json(const MaskReport& r) {
  nlohmann::ordered_json series = nlohmann::ordered_json::array();
  for (const auto& p : r.abs_diff_series) {
    series.push_back({p.original_rank_index, p.abs_diff});
  }
  return {
      {"method", r.method},
      {"alpha", r.alpha},
      {"mode", r.mode},
      {"n", r.n},
      {"raw_moments_original", moments_json(r.raw_moments_original)},
      {"raw_moments_masked", moments_json(r.raw_moments_masked)},
      {"log_params_original", optional_json(r.log_params_original, params_json)},
      {"log_params_masked", optional_json(r.log_params_masked, params_json)},
      {"pearson_xy", optional_json(r.pearson_xy)},
      {"spearman_xy", optional_json(r.spearman_xy)},
      {"pearson_log_xy", optional_json(r.pearson_log_xy)},
      {"rank_swaps", r.rank_swaps},
      {"skewness_original", optional_json(r.skewness_original)},
      {"skewness_masked", optional_json(r.skewness_masked)},
      {"ks_stat_log", optional_json(r.ks_stat_log)},
      {"abs_diff_series", std::move(series)},
  };
}

double ks_log_normality(std::span<const double> y,
                        const LognormalParams& reference) {
  std::vector<double> logs = log_values(y);
  std::sort(logs.begin(), logs.end());
  const auto n = static_cast<double>(logs.size());

  if (reference.sigma_sq <= 0.0) {
    const double tol = 1e-12 * std::max(1.0, std::abs(reference.mu));
    const bool exact = std::all_of(logs.begin(), logs.end(), [&](double v) {
      return std::abs(v - reference.mu) <= tol;
    });
    return exact ? 0.0 : 1.0;
  }

  const double sd = std::sqrt(reference.sigma_sq);
  double d = 0.0;
  for (std::size_t i = 0; i < logs.size(); ++i) {
    const double f = normal_cdf(logs[i], reference.mu, sd);
    const double above = static_cast<double>(i + 1) / n - f;
    const double below = f - static_cast<double>(i) / n;
    d = std::max({d, above, below});
  }
  return d;
}

TailExposure tail_exposure(std::span<const double> x, std::span<const double> y,
                           double top_fraction) {
  if (x.size() != y.size()) {
    throw Error(Errc::kLengthMismatch,
                "original and masked columns differ in length");
  }
  if (!(top_fraction > 0.0 && top_fraction < 1.0)) {
    throw Error(Errc::kUsage, "top fraction must lie in (0, 1)");
  }
  const std::size_t n = x.size();
  if (n < 2) {
    throw Error(Errc::kEmptyColumn, "tail exposure needs at least 2 values");
  }
  // The 1e-9 slack keeps e.g. 0.05 * 1000 from rounding up to 51.
  auto top = static_cast<std::size_t>(
      std::ceil(top_fraction * static_cast<double>(n) - 1e-9));
  top = std::clamp<std::size_t>(top, 1, n - 1);

  const auto rx = ranks(x);
  double top_sum = 0.0;
  double rest_sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double d = std::abs(y[i] - x[i]);
    if (rx[i] > n - top) {
      top_sum += d;
    } else {
      rest_sum += d;
    }
  }
  return {top_sum / static_cast<double>(top),
          rest_sum / static_cast<double>(n - top)};
}

std::vector<HistogramBin> density_histogram(std::span<const double> x,
                                            std::span<const double> y,
                                            std::size_t bins,
                                            double upper_quantile) {
  if (x.empty() || y.empty()) {
    throw Error(Errc::kEmptyColumn, "histogram of an empty column");
  }
  if (bins == 0) throw Error(Errc::kUsage, "histogram needs at least one bin");
  std::vector<double> sorted(x.begin(), x.end());
  std::sort(sorted.begin(), sorted.end());
  const double lo = sorted.front();
  const auto q_index = static_cast<std::size_t>(
      std::clamp(upper_quantile, 0.0, 1.0) *
      static_cast<double>(sorted.size() - 1));
  double hi = sorted[q_index];
  if (!(hi > lo)) hi = lo + 1.0;
  const double width = (hi - lo) / static_cast<double>(bins);

  std::vector<HistogramBin> out(bins);
  for (std::size_t b = 0; b < bins; ++b) {
    out[b].lower = lo + width * static_cast<double>(b);
    out[b].upper = b + 1 == bins ? hi : lo + width * static_cast<double>(b + 1);
  }
  auto fill = [&](std::span<const double> v, double HistogramBin::*field) {
    const double weight = 1.0 / (static_cast<double>(v.size()) * width);
    for (double e : v) {
      if (e < lo || e > hi) continue;
      auto b = static_cast<std::size_t>((e - lo) / width);
      if (b >= bins) b = bins - 1;
      out[b].*field += weight;
    }
  };
  fill(x, &HistogramBin::density_original);
  fill(y, &HistogramBin::density_masked);
  return out;
}

}  // namespace sdcmask
