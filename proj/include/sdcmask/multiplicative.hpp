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
#include <vector>

#include "sdcmask/rng.hpp"
#include "sdcmask/stats.hpp"

// Multiplicative lognormal masking, Y = X^alpha * U^(1 - alpha).
//
// If X ~ LN(mu, sigma_sq) and U ~ LN(mu, (1 + alpha) / (1 - alpha) sigma_sq)
// is independent of X, then Y ~ LN(mu, sigma_sq): the masked column keeps the
// whole lognormal law of the original, skewness included, while alpha
// controls how close each y_i stays to its x_i.

namespace sdcmask {

/// Log-scale mean and population variance of a lognormal law.
struct LognormalParams {
  double mu = 0.0;
  double sigma_sq = 0.0;
  friend bool operator==(const LognormalParams&,
                         const LognormalParams&) = default;
};

struct MultiplicativeNoiseSpec {
  double alpha = 1.0;
  LognormalParams source_params;
  LognormalParams noise_params;
};

/// Mean and population variance of ln x. Throws NonPositiveValue (with the
/// offending index) unless every x_i > 0.
[[nodiscard]] LognormalParams estimate_log_params(std::span<const double> x);

struct LognormalMoments {
  double mean = 0.0;
  double variance = 0.0;
};

/// E(X) = exp(mu + sigma_sq / 2), V(X) = (exp(sigma_sq) - 1) exp(2 mu + sigma_sq).
[[nodiscard]] LognormalMoments lognormal_moments(const LognormalParams& p);

/// (exp(sigma_sq) + 2) sqrt(exp(sigma_sq) - 1); independent of mu.
[[nodiscard]] double lognormal_skewness(const LognormalParams& p);

/// Log-scale variance the noise U needs so that Y keeps sigma_sq:
/// (1 - alpha^2) / (1 - alpha)^2 sigma_sq, evaluated as
/// (1 + alpha) / (1 - alpha) sigma_sq. Throws AlphaOutOfRange unless
/// 0 <= alpha < 1.
[[nodiscard]] double noise_variance_multiplicative(double alpha,
                                                   double sigma_sq);

[[nodiscard]] MultiplicativeNoiseSpec calibrate_multiplicative(
    const LognormalParams& source, double alpha);

/// Law of X^exponent: (exponent mu, exponent^2 sigma_sq).
[[nodiscard]] LognormalParams power_law_params(const LognormalParams& p,
                                               double exponent);

/// Law of the product of two independent lognormals.
[[nodiscard]] LognormalParams product_law_params(const LognormalParams& p,
                                                 const LognormalParams& q);

/// Masks the strictly positive column x.
///
/// Computed on the log scale as
///   ln y_i = alpha ln x_i + (1 - alpha) mu + sqrt(1 - alpha^2) sigma z_i
/// with z standard normal from the stream (seed, stream_label). This is
/// the same map as raising U to the power 1 - alpha, but avoids forming U,
/// whose variance diverges as alpha -> 1.
///
/// In exact mode z is standardized to mean 0, variance 1 and zero covariance
/// with ln x, so estimate_log_params(y) == estimate_log_params(x) and
/// pearson(ln x, ln y) == alpha up to rounding. alpha == 1 and columns with
/// constant logs are returned unchanged.
[[nodiscard]] ColumnVector mask_multiplicative(
    std::span<const double> x, double alpha, Seed seed, NoiseMode mode,
    std::string_view stream_label = "z");

/// The log-scale map above with a caller-supplied z, used as is. For tests.
[[nodiscard]] ColumnVector apply_multiplicative(std::span<const double> x,
                                                double alpha,
                                                std::span<const double> z);

/// Elementwise natural log of a strictly positive column.
[[nodiscard]] std::vector<double> log_values(std::span<const double> x);

}  // namespace sdcmask
