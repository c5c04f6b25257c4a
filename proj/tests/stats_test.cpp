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

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include "sdcmask/error.hpp"
#include "test_util.hpp"

namespace sdcmask {
namespace {

using Vec = std::vector<double>;
using testing::error_of;

// Brute-force third standardized moment in long double, written straight
// from the definition.
double skewness_oracle(const Vec& x) {
  long double m = 0;
  for (double v : x) m += v;
  m /= x.size();
  long double m2 = 0, m3 = 0;
  for (double v : x) {
    m2 += (v - m) * (v - m);
    m3 += (v - m) * (v - m) * (v - m);
  }
  m2 /= x.size();
  m3 /= x.size();
  return static_cast<double>(m3 / std::pow(m2, 1.5L));
}

Vec random_vector(std::mt19937_64& rng, std::size_t n) {
  std::lognormal_distribution<double> dist(0.0, 1.0);
  Vec v(n);
  for (double& e : v) e = dist(rng) - 1.0;
  return v;
}

TEST(ColumnVectorTest, RejectsEmptyAndNonFinite) {
  EXPECT_EQ(error_of([] { ColumnVector c(Vec{}); }), Errc::kEmptyColumn);
  EXPECT_EQ(error_of([] { ColumnVector c{1.0, std::nan("")}; }),
            Errc::kNonFiniteValue);
  EXPECT_EQ(error_of([] {
              ColumnVector c{std::numeric_limits<double>::infinity()};
            }),
            Errc::kNonFiniteValue);
  try {
    ColumnVector c{1.0, 2.0, -std::numeric_limits<double>::infinity()};
  } catch (const Error& e) {
    EXPECT_EQ(e.index(), 2u);
  }
}

TEST(MeanTest, WorkedExamples) {
  EXPECT_EQ(mean(Vec{0, 0, 0}), 0.0);
  EXPECT_EQ(mean(Vec{-1, 1}), 0.0);
  EXPECT_DOUBLE_EQ(mean(Vec{1, 2, 6}), 3.0);
  EXPECT_EQ(error_of([] { (void)mean(Vec{}); }), Errc::kEmptyColumn);
}

TEST(VarianceTest, PopulationDefinition) {
  EXPECT_EQ(variance(Vec{5, 5, 5}), 0.0);
  EXPECT_DOUBLE_EQ(variance(Vec{-1, 1}), 1.0);
  EXPECT_DOUBLE_EQ(variance(Vec{0, 2}), 1.0);
  EXPECT_EQ(error_of([] { (void)variance(Vec{}); }), Errc::kEmptyColumn);
}

TEST(CovarianceTest, WorkedExamples) {
  EXPECT_DOUBLE_EQ(covariance(Vec{-1, 1}, Vec{1, -1}), -1.0);
  EXPECT_DOUBLE_EQ(covariance(Vec{-1, 0, 1}, Vec{0, 1, -1}), -1.0 / 3.0);
  EXPECT_EQ(error_of([] { (void)covariance(Vec{1, 2}, Vec{1}); }),
            Errc::kLengthMismatch);
  EXPECT_EQ(error_of([] { (void)covariance(Vec{}, Vec{}); }),
            Errc::kEmptyColumn);
}

TEST(CovarianceTest, SelfCovarianceIsVarianceExactly) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const Vec x = random_vector(rng, 1 + trial * 7);
    EXPECT_EQ(covariance(x, x), variance(x));
  }
}

TEST(PearsonTest, WorkedExamples) {
  const Vec x{1, 2, 3};
  Vec neg{-1, -2, -3};
  EXPECT_DOUBLE_EQ(pearson(x, x), 1.0);
  EXPECT_DOUBLE_EQ(pearson(x, neg), -1.0);
  EXPECT_DOUBLE_EQ(pearson(x, Vec{1, 3, 2}), 0.5);
  EXPECT_EQ(error_of([&] { (void)pearson(x, Vec{2, 2, 2}); }),
            Errc::kZeroVariance);
  EXPECT_EQ(error_of([&] { (void)pearson(x, Vec{1, 2}); }),
            Errc::kLengthMismatch);
}

TEST(PearsonTest, InvariantUnderPositiveAffineMaps) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> scale(0.01, 100.0);
  std::uniform_real_distribution<double> shift(-1e3, 1e3);
  for (int trial = 0; trial < 100; ++trial) {
    const Vec x = random_vector(rng, 20);
    const Vec y = random_vector(rng, 20);
    Vec ax = x, ay = y;
    const double a = scale(rng), b = shift(rng), c = scale(rng), d = shift(rng);
    for (double& e : ax) e = a * e + b;
    for (double& e : ay) e = c * e + d;
    const double r = pearson(x, y);
    EXPECT_NEAR(pearson(ax, ay), r, 1e-12 * std::max(1.0, std::abs(r)));
    EXPECT_LE(std::abs(r), 1.0);
  }
}

TEST(RanksTest, AscendingWithStableTies) {
  EXPECT_EQ(ranks(Vec{10, 20, 30}), (std::vector<std::size_t>{1, 2, 3}));
  EXPECT_EQ(ranks(Vec{30, 10, 20}), (std::vector<std::size_t>{3, 1, 2}));
  EXPECT_EQ(ranks(Vec{5, 5}), (std::vector<std::size_t>{1, 2}));
  EXPECT_EQ(ranks(Vec{2, 1, 2, 1}), (std::vector<std::size_t>{3, 1, 4, 2}));
  EXPECT_EQ(error_of([] { (void)ranks(Vec{}); }), Errc::kEmptyColumn);
}

TEST(SpearmanTest, WorkedExamples) {
  const Vec asc{1, 2, 3, 4, 5};
  const Vec desc{50, 40, 30, 20, 10};
  EXPECT_DOUBLE_EQ(spearman(asc, asc), 1.0);
  EXPECT_DOUBLE_EQ(spearman(asc, desc), -1.0);
  EXPECT_DOUBLE_EQ(spearman(Vec{1, 2, 3}, Vec{1, 3, 2}), 0.5);
  EXPECT_EQ(error_of([] { (void)spearman(Vec{1}, Vec{1}); }),
            Errc::kZeroVariance);
}

TEST(RankSwapTest, WorkedExamples) {
  const Vec x{1, 2, 3, 4};
  EXPECT_EQ(rank_swap_count(x, x), 0u);
  EXPECT_EQ(rank_swap_count(x, Vec{4, 3, 2, 1}), 4u);
  EXPECT_EQ(rank_swap_count(Vec{1, 2, 3}, Vec{1, 3, 2}), 2u);
  EXPECT_EQ(error_of([] { (void)rank_swap_count(Vec{1}, Vec{1, 2}); }),
            Errc::kLengthMismatch);
}

TEST(RankSwapTest, ZeroExactlyWhenRanksAgree) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const Vec x = random_vector(rng, 8);
    Vec y = x;
    // Either a monotone transform (same ranks) or a random perturbation.
    if (trial % 2 == 0) {
      for (double& e : y) e = std::exp(e) * 3.0 + 1.0;
    } else {
      y = random_vector(rng, 8);
    }
    EXPECT_EQ(rank_swap_count(x, y) == 0, ranks(x) == ranks(y));
  }
}

TEST(SkewnessTest, WorkedExamples) {
  EXPECT_NEAR(skewness(Vec{-1, 0, 1}), 0.0, 1e-15);
  const Vec x{0, 0, 3};
  EXPECT_NEAR(skewness_oracle(x), 1.0 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(skewness(x), 1.0 / std::sqrt(2.0), 1e-14);
  EXPECT_NEAR(skewness(Vec{7, 7 - 2.5, 7 + 2.5, 7 - 0.5, 7 + 0.5}), 0.0, 1e-14);
  EXPECT_EQ(error_of([] { (void)skewness(Vec{4, 4, 4}); }), Errc::kZeroVariance);
  EXPECT_EQ(error_of([] { (void)skewness(Vec{4}); }), Errc::kZeroVariance);
}

TEST(SkewnessTest, AgreesWithOracleAffineInvariantAndOdd) {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 100; ++trial) {
    const Vec x = random_vector(rng, 30);
    const double g = skewness(x);
    EXPECT_NEAR(g, skewness_oracle(x), 1e-12 * std::max(1.0, std::abs(g)));

    Vec affine = x, reflected = x;
    for (double& e : affine) e = 4.5 * e - 12.0;
    for (double& e : reflected) e = -e;
    EXPECT_NEAR(skewness(affine), g, 1e-9);
    EXPECT_NEAR(skewness(reflected), -g, 1e-9);
  }
}

TEST(MomentsTest, Summary) {
  const MomentSummary m = moments(Vec{1, 2, 6});
  EXPECT_DOUBLE_EQ(m.mean, 3.0);
  EXPECT_DOUBLE_EQ(m.variance, 14.0 / 3.0);
  EXPECT_EQ(m.n, 3u);
}

}  // namespace
}  // namespace sdcmask
