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
#include <initializer_list>
#include <span>
#include <vector>

namespace sdcmask {

/// Observations of one variable, indexed by respondent.
///
/// Holds at least one value and every value is finite; both are checked on
/// construction (EmptyColumn, NonFiniteValue). The length never changes.
class ColumnVector {
 public:
  explicit ColumnVector(std::vector<double> values);
  ColumnVector(std::initializer_list<double> values);

  [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }
  [[nodiscard]] double operator[](std::size_t i) const { return values_[i]; }
  [[nodiscard]] std::span<const double> values() const noexcept {
    return values_;
  }
  operator std::span<const double>() const noexcept { return values_; }

  [[nodiscard]] auto begin() const noexcept { return values_.begin(); }
  [[nodiscard]] auto end() const noexcept { return values_.end(); }

  friend bool operator==(const ColumnVector&, const ColumnVector&) = default;

 private:
  std::vector<double> values_;
};

/// Population (divide-by-n) first and second moments.
struct MomentSummary {
  double mean = 0.0;
  double variance = 0.0;
  std::size_t n = 0;
};

// All statistics below use population moments. Inputs are spans so the same
// routines serve ColumnVectors and intermediate buffers; an empty span throws
// EmptyColumn and mismatched lengths throw LengthMismatch.

[[nodiscard]] double mean(std::span<const double> x);
[[nodiscard]] double variance(std::span<const double> x);
[[nodiscard]] double covariance(std::span<const double> x,
                                std::span<const double> s);
[[nodiscard]] MomentSummary moments(std::span<const double> x);

/// Pearson correlation clamped to [-1, 1]. Throws ZeroVariance if either
/// argument is constant.
[[nodiscard]] double pearson(std::span<const double> x,
                             std::span<const double> y);

/// 1-based ascending ranks; equal values keep their original order.
[[nodiscard]] std::vector<std::size_t> ranks(std::span<const double> x);

/// Pearson correlation of the two rank sequences. Needs n >= 2.
[[nodiscard]] double spearman(std::span<const double> x,
                              std::span<const double> y);

/// Number of positions whose rank differs between x and y.
[[nodiscard]] std::size_t rank_swap_count(std::span<const double> x,
                                          std::span<const double> y);

/// Third standardized moment, (1/n) sum ((x_i - mean) / sd)^3.
[[nodiscard]] double skewness(std::span<const double> x);

}  // namespace sdcmask
