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

#include <string_view>

#include "sdcmask/rng.hpp"
#include "sdcmask/stats.hpp"

// Additive hybrid generator. The masked value for respondent i is
//
//   y_i = [(1 - alpha) mean(x) - beta mean(s)] + alpha x_i + beta s_i + u_i
//
// with beta = (1 - alpha) cov(s, x) / var(s) and u ~ N(0, sigma_uu) where
// sigma_uu = (1 - alpha^2) (var(x) - cov(s, x)^2 / var(s)). This keeps the
// mean and variance of x and its covariance with the key column s.

namespace sdcmask {

struct AdditiveNoiseSpec {
  double alpha = 1.0;
  double beta = 0.0;
  double sigma_uu = 0.0;  // variance of u, not its standard deviation
  MomentSummary x_moments;
  MomentSummary s_moments;
  double cov_sx = 0.0;
};

/// Derives beta and sigma_uu from the sample moments of x and s.
///
/// Throws AlphaOutOfRange unless 0 <= alpha <= 1, ZeroVariance when s is
/// constant, LengthMismatch, and NegativeNoiseVariance if rounding pushes
/// sigma_uu below -1e-12 (values in [-1e-12, 0) are floored to 0).
[[nodiscard]] AdditiveNoiseSpec calibrate_additive(std::span<const double> x,
                                                   std::span<const double> s,
                                                   double alpha);

/// Masks x with noise from the stream (seed, stream_label).
///
/// In exact mode u is standardized to mean 0, variance sigma_uu and zero
/// covariance with x and s, so mean, variance and cov(s, .) carry over
/// exactly. alpha == 1 returns x.
[[nodiscard]] ColumnVector mask_additive(std::span<const double> x,
                                         std::span<const double> s,
                                         double alpha, Seed seed,
                                         NoiseMode mode,
                                         std::string_view stream_label = "u");

/// Applies the hybrid equation with a caller-supplied noise vector `u`
/// (used as is, no standardization). Intended for tests.
[[nodiscard]] ColumnVector apply_additive(std::span<const double> x,
                                          std::span<const double> s,
                                          const AdditiveNoiseSpec& spec,
                                          std::span<const double> u);

}  // namespace sdcmask
