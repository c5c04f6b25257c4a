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

#include "sdcmask/multiplicative.hpp"

#include <array>
#include <cmath>
#include <string>

#include "sdcmask/error.hpp"

namespace sdcmask {

namespace {

void check_alpha(double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw Error(Errc::kAlphaOutOfRange,
                "alpha must lie in [0, 1], got " + std::to_string(alpha));
  }
}

// sqrt(1 - alpha^2) without cancellation near alpha = 1.
double noise_weight(double alpha) {
  return std::sqrt((1.0 - alpha) * (1.0 + alpha));
}

ColumnVector log_scale_map(std::span<const double> log_x,
                           const LognormalParams& p, double alpha,
                           std::span<const double> z) {
  const double offset = (1.0 - alpha) * p.mu;
  const double scale = noise_weight(alpha) * std::sqrt(p.sigma_sq);
  std::vector<double> y(log_x.size());
  for (std::size_t i = 0; i < y.size(); ++i) {
    y[i] = std::exp(alpha * log_x[i] + offset + scale * z[i]);
  }
  return ColumnVector(std::move(y));
}

}  // namespace

std::vector<double> log_values(std::span<const double> x) {
  if (x.empty()) throw Error(Errc::kEmptyColumn, "column has no observations");
  std::vector<double> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] > 0.0)) {
      throw Error(Errc::kNonPositiveValue,
                  "value at index " + std::to_string(i) +
                      " is not strictly positive",
                  i);
    }
    out[i] = std::log(x[i]);
  }
  return out;
}

LognormalParams estimate_log_params(std::span<const double> x) {
  const std::vector<double> logs = log_values(x);
  const MomentSummary m = moments(logs);
  return {m.mean, m.variance};
}

LognormalMoments lognormal_moments(const LognormalParams& p) {
  return {std::exp(p.mu + p.sigma_sq / 2.0),
          std::expm1(p.sigma_sq) * std::exp(2.0 * p.mu + p.sigma_sq)};
}

double lognormal_skewness(const LognormalParams& p) {
  return (std::exp(p.sigma_sq) + 2.0) * std::sqrt(std::expm1(p.sigma_sq));
}

double noise_variance_multiplicative(double alpha, double sigma_sq) {
  if (!(alpha >= 0.0 && alpha < 1.0)) {
    throw Error(Errc::kAlphaOutOfRange,
                "noise variance needs 0 <= alpha < 1, got " +
                    std::to_string(alpha));
  }
  return (1.0 + alpha) / (1.0 - alpha) * sigma_sq;
}

MultiplicativeNoiseSpec calibrate_multiplicative(const LognormalParams& source,
                                                 double alpha) {
  return {alpha, source,
          {source.mu, noise_variance_multiplicative(alpha, source.sigma_sq)}};
}

LognormalParams power_law_params(const LognormalParams& p, double exponent) {
  return {exponent * p.mu, exponent * exponent * p.sigma_sq};
}

LognormalParams product_law_params(const LognormalParams& p,
                                   const LognormalParams& q) {
  return {p.mu + q.mu, p.sigma_sq + q.sigma_sq};
}

ColumnVector apply_multiplicative(std::span<const double> x, double alpha,
                                  std::span<const double> z) {
  check_alpha(alpha);
  if (z.size() != x.size()) {
    throw Error(Errc::kLengthMismatch, "noise length differs from the data");
  }
  const std::vector<double> logs = log_values(x);
  const MomentSummary m = moments(logs);
  return log_scale_map(logs, {m.mean, m.variance}, alpha, z);
}

ColumnVector mask_multiplicative(std::span<const double> x, double alpha,
                                 Seed seed, NoiseMode mode,
                                 std::string_view stream_label) {
  check_alpha(alpha);
  const std::vector<double> logs = log_values(x);
  if (alpha == 1.0) return ColumnVector(std::vector<double>(x.begin(), x.end()));

  const MomentSummary m = moments(logs);
  // Constant logs: the calibrated noise is the point mass at mu.
  if (m.variance == 0.0) {
    return ColumnVector(std::vector<double>(x.begin(), x.end()));
  }
  const LognormalParams p{m.mean, m.variance};
  const ColumnVector z = standard_normals(seed, stream_label, x.size());
  if (mode == NoiseMode::kExact) {
    const std::array<std::span<const double>, 1> constraints{logs};
    return log_scale_map(logs, p, alpha,
                         standardize_exact(z, 0.0, 1.0, constraints));
  }
  return log_scale_map(logs, p, alpha, z);
}

}  // namespace sdcmask
