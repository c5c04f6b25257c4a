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
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "sdcmask/stats.hpp"

namespace sdcmask {

struct Seed {
  std::uint64_t value = 0;
  friend bool operator==(Seed, Seed) = default;
};

/// How finite-sample noise is realized.
///
/// kStochastic uses raw i.i.d. draws, so moment and orthogonality conditions
/// hold only in expectation. kExact passes the draws through
/// standardize_exact() so they hold in the sample itself.
enum class NoiseMode { kExact, kStochastic };

[[nodiscard]] std::string_view to_string(NoiseMode mode) noexcept;
[[nodiscard]] std::optional<NoiseMode> parse_noise_mode(std::string_view text);

/// 64-bit key of the stream named `stream_label` under `seed`.
///
/// The label is hashed with FNV-1a and combined with the seed through two
/// rounds of the SplitMix64 finalizer, so streams with different labels are
/// statistically unrelated.
[[nodiscard]] std::uint64_t stream_key(Seed seed, std::string_view stream_label);

/// n standard normal deviates from the stream (seed, stream_label).
///
/// Generator: std::mt19937_64 seeded with stream_key(); each pair of 64-bit
/// outputs becomes two uniforms u = (top 53 bits + 0.5) / 2^53 in (0, 1) and
/// then two normals by the Box-Muller transform
///   r = sqrt(-2 ln u1),  z0 = r cos(2 pi u2),  z1 = r sin(2 pi u2).
/// An odd n drops the final z1. The output depends only on the arguments.
/// Throws EmptyRequest for n == 0.
[[nodiscard]] ColumnVector standard_normals(Seed seed,
                                            std::string_view stream_label,
                                            std::size_t n);

/// Rescale `z` so that in sample, to rounding error,
///   mean(u) == target_mean, variance(u) == target_var, and
///   covariance(u, v) == 0 for every v in orthogonal_to.
///
/// z is centered, the centered constraint vectors are orthonormalized by
/// modified Gram-Schmidt (constraints that are constant or linearly
/// dependent on earlier ones drop out), the residual is projected off that
/// basis twice and finally scaled to target_var.
///
/// target_var == 0 returns the constant column target_mean. Throws
/// DegenerateResidual when n < 2 + orthogonal_to.size() or when the projected
/// residual vanishes, LengthMismatch on ragged constraints and
/// NegativeNoiseVariance for target_var < 0.
[[nodiscard]] ColumnVector standardize_exact(
    std::span<const double> z, double target_mean, double target_var,
    std::span<const std::span<const double>> orthogonal_to = {});

}  // namespace sdcmask
