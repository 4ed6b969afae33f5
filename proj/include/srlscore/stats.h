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

// Correlation with human judgments and paired permutation significance tests
// for comparing two metrics.

#ifndef SRLSCORE_STATS_H_
#define SRLSCORE_STATS_H_

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace srlscore {

enum class CorrelationStat { kPearson, kSpearman };

CorrelationStat ParseCorrelationStat(std::string_view name);
std::string_view CorrelationStatName(CorrelationStat stat);

// Sample Pearson correlation. Throws std::invalid_argument for mismatched
// lengths or fewer than two points, UndefinedCorrelationError when either
// input is constant.
double Pearson(std::span<const double> x, std::span<const double> y);

// 1-based ranks; tied values share the mean of the ranks they span.
std::vector<double> AverageRanks(std::span<const double> values);

// Pearson correlation of average ranks.
double Spearman(std::span<const double> x, std::span<const double> y);

double Correlation(CorrelationStat stat, std::span<const double> x,
                   std::span<const double> y);

inline constexpr int kDefaultIterations = 10000;
inline constexpr std::uint64_t kDefaultSeed = 256;

struct SignificanceResult {
  double observed_delta = 0.0;
  double p_value = 1.0;
  // Permuted deltas at least as large as the observed one.
  std::int64_t count_ge = 0;
  std::int64_t iterations = 0;
  std::uint64_t seed = 0;

  nlohmann::json ToJson() const;
};

// Permuted deltas within this distance below the observed one count as ties.
inline constexpr double kDeltaTieTolerance = 1e-12;

// Two-sided paired permutation test of
//   |corr(a, human) - corr(b, human)|.
// Each iteration swaps a_i and b_i independently with probability 1/2. The
// swap bits of iteration k come from a generator seeded with (seed, k), so
// the result is the same for every `jobs`. p = (count_ge + 1) /
// (iterations + 1).
SignificanceResult PermutationTest(std::span<const double> metric_a,
                                   std::span<const double> metric_b,
                                   std::span<const double> human,
                                   CorrelationStat stat, int iterations,
                                   std::uint64_t seed, int jobs = 1);

// Same statistic and p-value rule, but the iterations are the given swap
// patterns (pattern[i] != 0 swaps instance i) instead of random draws.
SignificanceResult PermutationTestWithPatterns(
    std::span<const double> metric_a, std::span<const double> metric_b,
    std::span<const double> human, CorrelationStat stat,
    std::span<const std::vector<char>> patterns);

// All 2^n swap patterns of n instances, pattern k swapping instance i iff
// bit i of k is set. n must be at most 20.
std::vector<std::vector<char>> AllSwapPatterns(std::size_t n);

struct BonferroniDecision {
  double adjusted_alpha = 0.0;
  bool significant = false;
};

// adjusted alpha = alpha / k; significant iff p < adjusted alpha.
std::vector<BonferroniDecision> Bonferroni(std::span<const double> p_values,
                                           double alpha);

}  // namespace srlscore

#endif  // SRLSCORE_STATS_H_
