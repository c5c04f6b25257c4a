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

#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <vector>

#include "test_util.hpp"

namespace sdcmask {
namespace {

using Vec = std::vector<double>;
using testing::error_of;

struct Pair {
  Vec x;
  Vec s;
};

// Jointly normal (x, s) with correlation rho and nonzero means.
Pair joint_sample(std::uint64_t seed, std::size_t n, double rho) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  Pair p{Vec(n), Vec(n)};
  for (std::size_t i = 0; i < n; ++i) {
    const double a = g(rng);
    const double b = rho * a + std::sqrt(1 - rho * rho) * g(rng);
    p.x[i] = 50.0 + 12.0 * a;
    p.s[i] = -3.0 + 0.5 * b;
  }
  return p;
}

// One-sample KS distance of v against N(m, var); brute force from the
// definition.
double ks_normal(Vec v, double m, double var) {
  std::sort(v.begin(), v.end());
  const double n = static_cast<double>(v.size());
  double d = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const double f = 0.5 * std::erfc(-(v[i] - m) / std::sqrt(2 * var));
    d = std::max({d, (i + 1) / n - f, f - i / n});
  }
  return d;
}

TEST(CalibrateAdditiveTest, AlphaOneMeansNoNoise) {
  const AdditiveNoiseSpec spec = calibrate_additive(Vec{1, 5, 2}, Vec{0, 1, 3}, 1.0);
  EXPECT_EQ(spec.beta, 0.0);
  EXPECT_EQ(spec.sigma_uu, 0.0);
}

TEST(CalibrateAdditiveTest, WorkedExample) {
  // var_x = var_s = 2/3, cov = -1/3:
  //   beta = 0.5 * (-1/3) / (2/3) = -0.25
  //   sigma_uu = 0.75 * (2/3 - (1/9) / (2/3)) = 0.375
  const AdditiveNoiseSpec spec = calibrate_additive(Vec{-1, 0, 1}, Vec{0, 1, -1}, 0.5);
  EXPECT_DOUBLE_EQ(spec.beta, -0.25);
  EXPECT_DOUBLE_EQ(spec.sigma_uu, 0.375);
  EXPECT_DOUBLE_EQ(spec.cov_sx, -1.0 / 3.0);
  EXPECT_DOUBLE_EQ(spec.x_moments.variance, 2.0 / 3.0);
}

TEST(CalibrateAdditiveTest, CollinearKeyGivesNoNoise) {
  const Vec x{1, 2, 3, 7};
  Vec s(x);
  for (double& e : s) e = -4 * e + 2;
  for (double alpha : {0.0, 0.3, 0.9}) {
    EXPECT_NEAR(calibrate_additive(x, s, alpha).sigma_uu, 0.0, 1e-12);
  }
}

TEST(CalibrateAdditiveTest, CalibrationInvariants) {
  const Pair p = joint_sample(5, 200, 0.4);
  for (double alpha : {0.0, 0.25, 0.5, 0.99}) {
    const auto spec = calibrate_additive(p.x, p.s, alpha);
    const double vs = spec.s_moments.variance;
    EXPECT_DOUBLE_EQ(spec.beta, (1 - alpha) * spec.cov_sx / vs);
    EXPECT_DOUBLE_EQ(spec.sigma_uu,
                     (1 - alpha * alpha) *
                         (spec.x_moments.variance - spec.cov_sx * spec.cov_sx / vs));
    EXPECT_GE(spec.sigma_uu, 0.0);
  }
}

TEST(CalibrateAdditiveTest, Errors) {
  const Vec x{1, 2, 3};
  EXPECT_EQ(error_of([&] { (void)calibrate_additive(x, x, -0.1); }),
            Errc::kAlphaOutOfRange);
  EXPECT_EQ(error_of([&] { (void)calibrate_additive(x, x, 1.5); }),
            Errc::kAlphaOutOfRange);
  EXPECT_EQ(error_of([&] { (void)calibrate_additive(x, x, std::nan("")); }),
            Errc::kAlphaOutOfRange);
  EXPECT_EQ(error_of([&] { (void)calibrate_additive(x, Vec{4, 4, 4}, 0.5); }),
            Errc::kZeroVariance);
  EXPECT_EQ(error_of([&] { (void)calibrate_additive(x, Vec{1, 2}, 0.5); }),
            Errc::kLengthMismatch);
}

TEST(MaskAdditiveTest, AlphaOneIsIdentity) {
  const Pair p = joint_sample(1, 50, 0.3);
  for (NoiseMode mode : {NoiseMode::kExact, NoiseMode::kStochastic}) {
    const ColumnVector y = mask_additive(p.x, p.s, 1.0, Seed{7}, mode);
    for (std::size_t i = 0; i < p.x.size(); ++i) {
      EXPECT_NEAR(y[i], p.x[i], 1e-12 * std::abs(p.x[i]));
    }
  }
}

TEST(MaskAdditiveTest, AlphaZeroWithKeyEqualToTarget) {
  const Vec x{3, -1, 4, 1, 5};
  const ColumnVector y = mask_additive(x, x, 0.0, Seed{7}, NoiseMode::kExact);
  for (std::size_t i = 0; i < x.size(); ++i) EXPECT_NEAR(y[i], x[i], 1e-12);
}

TEST(MaskAdditiveTest, WorkedExampleWithZeroNoise) {
  const Vec x{-1, 0, 1};
  const Vec s{0, 1, -1};
  const auto spec = calibrate_additive(x, s, 0.5);
  const ColumnVector y = apply_additive(x, s, spec, Vec{0, 0, 0});
  EXPECT_DOUBLE_EQ(y[0], -0.5);
  EXPECT_DOUBLE_EQ(y[1], -0.25);
  EXPECT_DOUBLE_EQ(y[2], 0.75);
}

TEST(MaskAdditiveTest, ExactModeNeedsRoomForNoise) {
  EXPECT_EQ(error_of([] {
              (void)mask_additive(Vec{-1, 0, 1}, Vec{0, 1, -1}, 0.5, Seed{1},
                                  NoiseMode::kExact);
            }),
            Errc::kDegenerateResidual);
}

TEST(MaskAdditiveTest, ExactModePreservesMomentsAndKeyCovariance) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const std::size_t n = seed % 2 == 0 ? 10 : 500;
    const Pair p = joint_sample(seed, n, -0.6 + 0.06 * seed);
    for (double alpha : {0.0, 0.3, 0.7, 0.95, 0.999}) {
      const ColumnVector y =
          mask_additive(p.x, p.s, alpha, Seed{seed}, NoiseMode::kExact);
      const double vx = variance(p.x);
      const double cx = covariance(p.s, p.x);
      EXPECT_NEAR(mean(y), mean(p.x), 1e-10 * std::abs(mean(p.x)));
      EXPECT_LE(std::abs(variance(y) - vx), 1e-10 * vx);
      EXPECT_LE(std::abs(covariance(p.s, y) - cx), 1e-10 * std::abs(cx) + 1e-12);
    }
  }
}

TEST(MaskAdditiveTest, ExactModeSimilarityIsAlpha) {
  // y - const = alpha x + beta s + u with u uncorrelated with x and s, so
  // cov(x, y) = alpha var(x) + beta cov(s, x).
  const Pair p = joint_sample(3, 300, 0.5);
  for (double alpha : {0.0, 0.5, 0.9}) {
    const auto spec = calibrate_additive(p.x, p.s, alpha);
    const ColumnVector y = mask_additive(p.x, p.s, alpha, Seed{3}, NoiseMode::kExact);
    const double expected = alpha * variance(p.x) + spec.beta * spec.cov_sx;
    EXPECT_NEAR(covariance(p.x, y), expected, 1e-10 * variance(p.x));
  }
}

TEST(MaskAdditiveTest, StochasticModeMeanWithinThreeSigma) {
  const Pair p = joint_sample(17, 2000, 0.2);
  for (double alpha : {0.0, 0.5, 0.9}) {
    const auto spec = calibrate_additive(p.x, p.s, alpha);
    const ColumnVector y =
        mask_additive(p.x, p.s, alpha, Seed{17}, NoiseMode::kStochastic);
    EXPECT_LE(std::abs(mean(y) - mean(p.x)),
              3 * std::sqrt(spec.sigma_uu) / std::sqrt(2000.0));
  }
}

TEST(MaskAdditiveTest, StochasticAlphaZeroUsesOnlyMomentsOfX) {
  // Build x2 with the same mean, variance and covariance with s as x but
  // different values; at alpha = 0 both must mask to the same column.
  const Pair p = joint_sample(8, 40, 0.5);
  const double slope = covariance(p.s, p.x) / variance(p.s);
  Vec residual(p.x.size());
  for (std::size_t i = 0; i < residual.size(); ++i) {
    residual[i] = p.x[i] - mean(p.x) - slope * (p.s[i] - mean(p.s));
  }
  const std::array<std::span<const double>, 2> constraints{p.s, residual};
  const ColumnVector other = standardize_exact(
      standard_normals(Seed{99}, "other", p.x.size()), 0.0, variance(residual),
      constraints);
  Vec x2(p.x.size());
  for (std::size_t i = 0; i < x2.size(); ++i) {
    x2[i] = mean(p.x) + slope * (p.s[i] - mean(p.s)) + other[i];
  }
  ASSERT_NE(x2, p.x);
  const ColumnVector y1 = mask_additive(p.x, p.s, 0.0, Seed{4}, NoiseMode::kStochastic);
  const ColumnVector y2 = mask_additive(x2, p.s, 0.0, Seed{4}, NoiseMode::kStochastic);
  for (std::size_t i = 0; i < x2.size(); ++i) {
    EXPECT_NEAR(y1[i], y2[i], 1e-9 * std::abs(y1[i]));
  }
}

TEST(MaskAdditiveTest, GaussianClosureStochasticMode) {
  const std::size_t n = 20000;
  const Pair p = joint_sample(21, n, 0.6);
  const ColumnVector y = mask_additive(p.x, p.s, 0.6, Seed{21}, NoiseMode::kStochastic);
  const Vec yv(y.begin(), y.end());
  EXPECT_LT(ks_normal(yv, mean(yv), variance(yv)), 1.63 / std::sqrt(double(n)));
}

TEST(MaskAdditiveTest, DeterministicAndStreamKeyed) {
  const Pair p = joint_sample(2, 100, 0.1);
  const auto a = mask_additive(p.x, p.s, 0.5, Seed{1}, NoiseMode::kExact, "income");
  const auto b = mask_additive(p.x, p.s, 0.5, Seed{1}, NoiseMode::kExact, "income");
  const auto c = mask_additive(p.x, p.s, 0.5, Seed{1}, NoiseMode::kExact, "wealth");
  EXPECT_EQ(a, b);
  EXPECT_NE(a, c);
}

}  // namespace
}  // namespace sdcmask
