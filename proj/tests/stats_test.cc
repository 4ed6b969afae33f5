// Copyright 2026 The SRLScore Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "srlscore/stats.h"

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

#include "srlscore/errors.h"

namespace srlscore {
namespace {

// Textbook single-pass formula, kept separate from the library code.
double NaivePearson(const std::vector<double> &x, const std::vector<double> &y) {
  const double n = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, syy = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    syy += y[i] * y[i];
    sxy += x[i] * y[i];
  }
  return (n * sxy - sx * sy) /
         std::sqrt((n * sxx - sx * sx) * (n * syy - sy * sy));
}

TEST(StatsTest, PearsonExamples) {
  std::vector<double> a = {1, 2, 3};
  std::vector<double> b = {3, 2, 1};
  EXPECT_NEAR(Pearson(a, a), 1.0, 1e-12);
  EXPECT_NEAR(Pearson(a, b), -1.0, 1e-12);
  EXPECT_NEAR(Pearson(std::vector<double>{1, 2, 3, 4},
                      std::vector<double>{1, 3, 2, 4}),
              0.8, 1e-12);
}

TEST(StatsTest, SpearmanExamples) {
  std::vector<double> x = {1, 2, 3, 4};
  EXPECT_NEAR(Spearman(x, std::vector<double>{1, 3, 2, 4}), 0.8, 1e-12);
  EXPECT_NEAR(Spearman(x, std::vector<double>{10, 20, 300, 4000}), 1.0, 1e-12);
  // Ranks (1, 2.5, 2.5, 4) against (1, 2, 3, 4): covariance 4.5 over
  // sqrt(4.5 * 5).
  EXPECT_NEAR(Spearman(std::vector<double>{1, 2, 2, 3}, x), std::sqrt(0.9),
              1e-12);
  EXPECT_EQ(AverageRanks(std::vector<double>{3, 1, 3, 2}),
            (std::vector<double>{3.5, 1, 3.5, 2}));
}

TEST(StatsTest, UndefinedAndInvalidInputs) {
  std::vector<double> flat = {2, 2, 2};
  std::vector<double> x = {1, 2, 3};
  EXPECT_THROW(Pearson(flat, x), UndefinedCorrelationError);
  EXPECT_THROW(Spearman(x, flat), UndefinedCorrelationError);
  EXPECT_THROW(Pearson(std::vector<double>{1, 2}, x), std::invalid_argument);
  EXPECT_THROW(Pearson(std::vector<double>{1}, std::vector<double>{1}),
               std::invalid_argument);
  EXPECT_THROW(PermutationTest(x, x, flat, CorrelationStat::kPearson, 10, 1),
               UndefinedCorrelationError);
  EXPECT_THROW(PermutationTest(x, x, x, CorrelationStat::kPearson, 0, 1),
               std::invalid_argument);
}

TEST(StatsPropertyTest, PearsonMatchesNaiveFormula) {
  std::mt19937 rng(43);
  std::uniform_int_distribution<int> value(-20, 20);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t n = 2 + rng() % 15;
    std::vector<double> x(n), y(n);
    for (std::size_t i = 0; i < n; ++i) {
      x[i] = value(rng);
      y[i] = value(rng);
    }
    double reference = NaivePearson(x, y);
    if (!std::isfinite(reference)) continue;
    ASSERT_NEAR(Pearson(x, y), reference, 1e-12);
    ASSERT_NEAR(Pearson(x, y), Pearson(y, x), 1e-15);
  }
}

TEST(StatsTest, IdenticalMetricsGivePOne) {
  std::vector<double> a = {0.1, 0.5, 0.2, 0.9};
  std::vector<double> h = {1, 3, 2, 4};
  SignificanceResult r =
      PermutationTest(a, a, h, CorrelationStat::kPearson, 500, 7);
  EXPECT_EQ(r.observed_delta, 0.0);
  EXPECT_EQ(r.p_value, 1.0);
  EXPECT_EQ(r.count_ge, 500);
}

TEST(StatsTest, ExhaustiveEnumerationMatchesHandOracle) {
  std::vector<double> a = {0.9, 0.1, 0.5};
  std::vector<double> b = {0.2, 0.7, 0.6};
  std::vector<double> h = {3, 1, 2};
  for (CorrelationStat stat :
       {CorrelationStat::kPearson, CorrelationStat::kSpearman}) {
    auto corr = [&](const std::vector<double> &m) {
      if (stat == CorrelationStat::kPearson) return NaivePearson(m, h);
      return NaivePearson(AverageRanks(m), AverageRanks(h));
    };
    double observed = std::abs(corr(a) - corr(b));
    int count = 0;
    for (int mask = 0; mask < 8; ++mask) {
      std::vector<double> pa = a, pb = b;
      for (int i = 0; i < 3; ++i) {
        if (mask >> i & 1) std::swap(pa[i], pb[i]);
      }
      double d = std::abs(corr(pa) - corr(pb));
      if (d >= observed - 1e-9) ++count;
    }
    double expected_p = (count + 1) / 9.0;
    auto patterns = AllSwapPatterns(3);
    ASSERT_EQ(patterns.size(), 8u);
    SignificanceResult r =
        PermutationTestWithPatterns(a, b, h, stat, patterns);
    EXPECT_EQ(r.count_ge, count);
    EXPECT_DOUBLE_EQ(r.p_value, expected_p);
    EXPECT_NEAR(r.observed_delta, observed, 1e-12);
  }
}

TEST(StatsTest, PermutationIsDeterministicAcrossJobs) {
  std::mt19937 rng(47);
  std::normal_distribution<double> noise;
  std::vector<double> a(60), b(60), h(60);
  for (int i = 0; i < 60; ++i) {
    h[i] = noise(rng);
    a[i] = h[i] + noise(rng);
    b[i] = h[i] + 2 * noise(rng);
  }
  SignificanceResult one =
      PermutationTest(a, b, h, CorrelationStat::kSpearman, 3000, 256, 1);
  SignificanceResult again =
      PermutationTest(a, b, h, CorrelationStat::kSpearman, 3000, 256, 1);
  SignificanceResult many =
      PermutationTest(a, b, h, CorrelationStat::kSpearman, 3000, 256, 4);
  EXPECT_EQ(one.p_value, again.p_value);
  EXPECT_EQ(one.count_ge, many.count_ge);
  EXPECT_EQ(one.p_value, many.p_value);
  EXPECT_EQ(one.seed, 256u);
  SignificanceResult other =
      PermutationTest(a, b, h, CorrelationStat::kSpearman, 3000, 257, 1);
  EXPECT_NE(one.count_ge, other.count_ge);
}

TEST(StatsTest, Bonferroni) {
  std::vector<double> single = {0.03};
  EXPECT_EQ(Bonferroni(single, 0.05)[0].adjusted_alpha, 0.05);
  std::vector<double> five(5, 0.5);
  EXPECT_DOUBLE_EQ(Bonferroni(five, 0.05)[0].adjusted_alpha, 0.01);
  // Adjusted level 0.025 for two comparisons.
  std::vector<double> two = {0.004, 0.03};
  auto d = Bonferroni(two, 0.05);
  EXPECT_DOUBLE_EQ(d[0].adjusted_alpha, 0.025);
  EXPECT_TRUE(d[0].significant);
  EXPECT_FALSE(d[1].significant);
  std::vector<double> under = {0.004, 0.02};
  d = Bonferroni(under, 0.05);
  EXPECT_TRUE(d[0].significant);
  EXPECT_TRUE(d[1].significant);
  std::vector<double> boundary = {0.025, 0.5};
  EXPECT_FALSE(Bonferroni(boundary, 0.05)[0].significant);
  EXPECT_THROW(Bonferroni(two, 0.0), std::invalid_argument);
  EXPECT_THROW(Bonferroni(two, 1.0), std::invalid_argument);
  EXPECT_THROW(Bonferroni(std::vector<double>{}, 0.05), std::invalid_argument);
}

}  // namespace
}  // namespace srlscore
