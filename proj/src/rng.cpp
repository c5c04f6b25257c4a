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

#include "sdcmask/rng.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "sdcmask/error.hpp"

namespace sdcmask {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t fnv1a64(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

// Uniform in the open interval (0, 1); never 0, so log() is safe.
double open_uniform(std::mt19937_64& engine) {
  constexpr double kScale = 1.0 / 9007199254740992.0;  // 2^-53
  return (static_cast<double>(engine() >> 11) + 0.5) * kScale;
}

double dot(std::span<const double> a, std::span<const double> b) {
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

void subtract_projection(std::vector<double>& r,
                         const std::vector<double>& unit) {
  const double c = dot(r, unit);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= c * unit[i];
}

std::vector<double> centered(std::span<const double> v) {
  const double m = mean(v);
  std::vector<double> out(v.begin(), v.end());
  for (double& e : out) e -= m;
  return out;
}

// Relative norm below which a projected vector is treated as zero.
constexpr double kDegenerateRatio = 1e-10;

}  // namespace

std::string_view to_string(NoiseMode mode) noexcept {
  return mode == NoiseMode::kExact ? "exact" : "stochastic";
}

std::optional<NoiseMode> parse_noise_mode(std::string_view text) {
  if (text == "exact") return NoiseMode::kExact;
  if (text == "stochastic") return NoiseMode::kStochastic;
  return std::nullopt;
}

std::uint64_t stream_key(Seed seed, std::string_view stream_label) {
  return splitmix64(splitmix64(seed.value) ^ fnv1a64(stream_label));
}

ColumnVector standard_normals(Seed seed, std::string_view stream_label,
                              std::size_t n) {
  if (n == 0) throw Error(Errc::kEmptyRequest, "requested zero deviates");
  std::mt19937_64 engine(stream_key(seed, stream_label));
  std::vector<double> out;
  out.reserve(n + 1);
  while (out.size() < n) {
    const double u1 = open_uniform(engine);
    const double u2 = open_uniform(engine);
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * std::numbers::pi * u2;
    out.push_back(r * std::cos(theta));
    out.push_back(r * std::sin(theta));
  }
  out.resize(n);
  return ColumnVector(std::move(out));
}

ColumnVector standardize_exact(
    std::span<const double> z, double target_mean, double target_var,
    std::span<const std::span<const double>> orthogonal_to) {
  if (z.empty()) throw Error(Errc::kEmptyColumn, "nothing to standardize");
  if (!(target_var >= 0.0)) {
    throw Error(Errc::kNegativeNoiseVariance, "target variance is negative");
  }
  const std::size_t n = z.size();
  for (auto v : orthogonal_to) {
    if (v.size() != n) {
      throw Error(Errc::kLengthMismatch,
                  "constraint length differs from the draw length");
    }
  }
  if (target_var == 0.0) {
    return ColumnVector(std::vector<double>(n, target_mean));
  }
  if (n < 2 + orthogonal_to.size()) {
    throw Error(Errc::kDegenerateResidual,
                "exact noise needs at least " +
                    std::to_string(2 + orthogonal_to.size()) +
                    " observations, got " + std::to_string(n));
  }

  std::vector<std::vector<double>> basis;
  for (auto v : orthogonal_to) {
    std::vector<double> c = centered(v);
    const double norm0 = std::sqrt(dot(c, c));
    if (norm0 == 0.0) continue;
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& b : basis) subtract_projection(c, b);
    }
    const double norm = std::sqrt(dot(c, c));
    if (norm <= kDegenerateRatio * norm0) continue;
    for (double& e : c) e /= norm;
    basis.push_back(std::move(c));
  }

  std::vector<double> r = centered(z);
  const double norm0 = std::sqrt(dot(r, r));
  for (int pass = 0; pass < 2; ++pass) {
    for (const auto& b : basis) subtract_projection(r, b);
  }
  // Projection onto centered vectors preserves the zero mean up to rounding;
  // remove what rounding left behind.
  const double drift = mean(r);
  for (double& e : r) e -= drift;

  const double norm = std::sqrt(dot(r, r));
  if (norm0 == 0.0 || norm <= kDegenerateRatio * norm0) {
    throw Error(Errc::kDegenerateResidual,
                "noise draw lies in the span of the constraint vectors");
  }
  const double scale =
      std::sqrt(target_var * static_cast<double>(n)) / norm;
  for (double& e : r) e = target_mean + scale * e;
  return ColumnVector(std::move(r));
}

}  // namespace sdcmask
