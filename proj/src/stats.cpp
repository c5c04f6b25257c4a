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

#include "sdcmask/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "sdcmask/error.hpp"

namespace sdcmask {

namespace {

void require_nonempty(std::span<const double> x) {
  if (x.empty()) throw Error(Errc::kEmptyColumn, "column has no observations");
}

void require_same_length(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) {
    throw Error(Errc::kLengthMismatch,
                "columns differ in length: " + std::to_string(x.size()) +
                    " vs " + std::to_string(y.size()));
  }
}

std::vector<double> validated(std::vector<double> values) {
  if (values.empty()) {
    throw Error(Errc::kEmptyColumn, "column has no observations");
  }
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i])) {
      throw Error(Errc::kNonFiniteValue,
                  "non-finite value at index " + std::to_string(i), i);
    }
  }
  return values;
}

std::vector<double> as_reals(const std::vector<std::size_t>& r) {
  return {r.begin(), r.end()};
}

}  // namespace

ColumnVector::ColumnVector(std::vector<double> values)
    : values_(validated(std::move(values))) {}

ColumnVector::ColumnVector(std::initializer_list<double> values)
    : values_(validated(std::vector<double>(values))) {}

double mean(std::span<const double> x) {
  require_nonempty(x);
  return std::accumulate(x.begin(), x.end(), 0.0) /
         static_cast<double>(x.size());
}

// Two-pass: center first, then accumulate. Keeps covariance(x, x) and
// variance(x) on the identical arithmetic path.
double covariance(std::span<const double> x, std::span<const double> s) {
  require_same_length(x, s);
  require_nonempty(x);
  const double mx = mean(x);
  const double ms = mean(s);
  double acc = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) acc += (x[i] - mx) * (s[i] - ms);
  return acc / static_cast<double>(x.size());
}

double variance(std::span<const double> x) { return covariance(x, x); }

MomentSummary moments(std::span<const double> x) {
  return {mean(x), variance(x), x.size()};
}

double pearson(std::span<const double> x, std::span<const double> y) {
  require_same_length(x, y);
  const double vx = variance(x);
  const double vy = variance(y);
  if (vx <= 0.0 || vy <= 0.0) {
    throw Error(Errc::kZeroVariance, "correlation of a constant column");
  }
  const double r = covariance(x, y) / std::sqrt(vx * vy);
  return std::clamp(r, -1.0, 1.0);
}

std::vector<std::size_t> ranks(std::span<const double> x) {
  require_nonempty(x);
  std::vector<std::size_t> order(x.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return x[a] < x[b]; });
  std::vector<std::size_t> r(x.size());
  for (std::size_t pos = 0; pos < order.size(); ++pos) r[order[pos]] = pos + 1;
  return r;
}

double spearman(std::span<const double> x, std::span<const double> y) {
  require_same_length(x, y);
  if (x.size() < 2) {
    throw Error(Errc::kZeroVariance, "rank correlation needs n >= 2");
  }
  return pearson(as_reals(ranks(x)), as_reals(ranks(y)));
}

std::size_t rank_swap_count(std::span<const double> x,
                            std::span<const double> y) {
  require_same_length(x, y);
  const auto rx = ranks(x);
  const auto ry = ranks(y);
  std::size_t swaps = 0;
  for (std::size_t i = 0; i < rx.size(); ++i) swaps += rx[i] != ry[i];
  return swaps;
}

double skewness(std::span<const double> x) {
  const MomentSummary m = moments(x);
  if (m.n < 2 || m.variance <= 0.0) {
    throw Error(Errc::kZeroVariance, "skewness of a constant column");
  }
  const double sd = std::sqrt(m.variance);
  double acc = 0.0;
  for (double v : x) {
    const double z = (v - m.mean) / sd;
    acc += z * z * z;
  }
  return acc / static_cast<double>(m.n);
}

}  // namespace sdcmask
