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

#include "sdcmask/additive.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "sdcmask/error.hpp"

namespace sdcmask {

namespace {

constexpr double kNoiseFloor = -1e-12;

void check_alpha(double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw Error(Errc::kAlphaOutOfRange,
                "alpha must lie in [0, 1], got " + std::to_string(alpha));
  }
}

}  // namespace

AdditiveNoiseSpec calibrate_additive(std::span<const double> x,
                                     std::span<const double> s, double alpha) {
  check_alpha(alpha);
  if (x.size() != s.size()) {
    throw Error(Errc::kLengthMismatch,
                "target and key columns differ in length");
  }
  AdditiveNoiseSpec spec;
  spec.alpha = alpha;
  spec.x_moments = moments(x);
  spec.s_moments = moments(s);
  spec.cov_sx = covariance(s, x);
  const double var_s = spec.s_moments.variance;
  if (!(var_s > 0.0)) {
    throw Error(Errc::kZeroVariance, "key column is constant");
  }
  spec.beta = (1.0 - alpha) * spec.cov_sx / var_s;

  const double residual =
      spec.x_moments.variance - spec.cov_sx * spec.cov_sx / var_s;
  double sigma_uu = (1.0 - alpha * alpha) * residual;
  // Cauchy-Schwarz makes residual >= 0; only rounding can break that.
  const double tolerance = kNoiseFloor * std::max(1.0, spec.x_moments.variance);
  if (sigma_uu < tolerance) {
    throw Error(Errc::kNegativeNoiseVariance,
                "calibrated noise variance is negative: " +
                    std::to_string(sigma_uu));
  }
  spec.sigma_uu = std::max(sigma_uu, 0.0);
  return spec;
}

ColumnVector apply_additive(std::span<const double> x,
                            std::span<const double> s,
                            const AdditiveNoiseSpec& spec,
                            std::span<const double> u) {
  if (x.size() != s.size() || x.size() != u.size()) {
    throw Error(Errc::kLengthMismatch, "noise length differs from the data");
  }
  const double alpha = spec.alpha;
  const double beta = spec.beta;
  const double offset =
      (1.0 - alpha) * spec.x_moments.mean - beta * spec.s_moments.mean;
  std::vector<double> y(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    y[i] = offset + alpha * x[i] + beta * s[i] + u[i];
  }
  return ColumnVector(std::move(y));
}

ColumnVector mask_additive(std::span<const double> x,
                           std::span<const double> s, double alpha, Seed seed,
                           NoiseMode mode, std::string_view stream_label) {
  const AdditiveNoiseSpec spec = calibrate_additive(x, s, alpha);
  if (alpha == 1.0) return ColumnVector(std::vector<double>(x.begin(), x.end()));

  const std::size_t n = x.size();
  if (spec.sigma_uu == 0.0) {
    return apply_additive(x, s, spec, std::vector<double>(n, 0.0));
  }
  const ColumnVector z = standard_normals(seed, stream_label, n);
  if (mode == NoiseMode::kExact) {
    const std::array<std::span<const double>, 2> constraints{x, s};
    return apply_additive(x, s, spec,
                          standardize_exact(z, 0.0, spec.sigma_uu, constraints));
  }
  const double sd = std::sqrt(spec.sigma_uu);
  std::vector<double> u(z.begin(), z.end());
  for (double& e : u) e *= sd;
  return apply_additive(x, s, spec, u);
}

}  // namespace sdcmask
