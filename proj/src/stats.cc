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

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "srlscore/errors.h"
#include "srlscore/parallel.h"

namespace srlscore {

CorrelationStat ParseCorrelationStat(std::string_view name) {
  if (name == "pearson") return CorrelationStat::kPearson;
  if (name == "spearman") return CorrelationStat::kSpearman;
  throw std::invalid_argument("unknown statistic \"" + std::string(name) +
                              "\" (expected pearson or spearman)");
}

std::string_view CorrelationStatName(CorrelationStat stat) {
  return stat == CorrelationStat::kPearson ? "pearson" : "spearman";
}

namespace {

void CheckPaired(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) {
    throw std::invalid_argument("correlation inputs differ in length (" +
                                std::to_string(x.size()) + " vs " +
                                std::to_string(y.size()) + ")");
  }
  if (x.size() < 2) {
    throw std::invalid_argument("correlation needs at least two points");
  }
}

double Mean(std::span<const double> v) {
  double sum = 0.0;
  for (double x : v) sum += x;
  return sum / static_cast<double>(v.size());
}

}  // namespace

double Pearson(std::span<const double> x, std::span<const double> y) {
  CheckPaired(x, y);
  const double mx = Mean(x);
  const double my = Mean(y);
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = x[i] - mx;
    const double dy = y[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0.0 || syy == 0.0) {
    throw UndefinedCorrelationError(
        "correlation undefined: input vector is constant");
  }
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

std::vector<double> AverageRanks(std::span<const double> values) {
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return values[a] < values[b];
  });
  std::vector<double> ranks(values.size());
  std::size_t i = 0;
  while (i < order.size()) {
    std::size_t j = i;
    while (j + 1 < order.size() && values[order[j + 1]] == values[order[i]]) ++j;
    // Positions i..j (0-based) hold ranks i+1..j+1.
    const double rank = (static_cast<double>(i + j) + 2.0) / 2.0;
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = rank;
    i = j + 1;
  }
  return ranks;
}

double Spearman(std::span<const double> x, std::span<const double> y) {
  CheckPaired(x, y);
  std::vector<double> rx = AverageRanks(x);
  std::vector<double> ry = AverageRanks(y);
  return Pearson(rx, ry);
}

double Correlation(CorrelationStat stat, std::span<const double> x,
                   std::span<const double> y) {
  return stat == CorrelationStat::kPearson ? Pearson(x, y) : Spearman(x, y);
}

namespace {

void CheckTestInputs(std::span<const double> a, std::span<const double> b,
                     std::span<const double> human) {
  if (a.size() != b.size() || a.size() != human.size()) {
    throw std::invalid_argument("permutation test inputs differ in length");
  }
  if (a.size() < 2) {
    throw std::invalid_argument("permutation test needs at least two instances");
  }
}

// A swap can leave one metric constant; it then carries no association.
double PermutedCorrelation(CorrelationStat stat, std::span<const double> x,
                           std::span<const double> human) {
  try {
    return Correlation(stat, x, human);
  } catch (const UndefinedCorrelationError &) {
    return 0.0;
  }
}

// Delta after applying `swap`; scratch buffers are reused by the caller.
double SwappedDelta(std::span<const double> a, std::span<const double> b,
                    std::span<const double> human, CorrelationStat stat,
                    const std::vector<char> &swap, std::vector<double> *pa,
                    std::vector<double> *pb) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    (*pa)[i] = swap[i] ? b[i] : a[i];
    (*pb)[i] = swap[i] ? a[i] : b[i];
  }
  return std::abs(PermutedCorrelation(stat, *pa, human) -
                  PermutedCorrelation(stat, *pb, human));
}

// Swap bits for one iteration, from a generator keyed on (seed, iteration).
void DrawSwaps(std::uint64_t seed, std::uint64_t iteration,
               std::vector<char> *swap) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(iteration),
                    static_cast<std::uint32_t>(iteration >> 32)};
  std::mt19937_64 gen(seq);
  for (char &s : *swap) s = static_cast<char>(gen() >> 63);
}

SignificanceResult Finish(double observed, std::int64_t count_ge,
                          std::int64_t iterations, std::uint64_t seed) {
  SignificanceResult result;
  result.observed_delta = observed;
  result.count_ge = count_ge;
  result.iterations = iterations;
  result.seed = seed;
  result.p_value = static_cast<double>(count_ge + 1) /
                   static_cast<double>(iterations + 1);
  return result;
}

}  // namespace

SignificanceResult PermutationTest(std::span<const double> metric_a,
                                   std::span<const double> metric_b,
                                   std::span<const double> human,
                                   CorrelationStat stat, int iterations,
                                   std::uint64_t seed, int jobs) {
  CheckTestInputs(metric_a, metric_b, human);
  if (iterations < 1) throw std::invalid_argument("iterations must be >= 1");
  const double observed = std::abs(Correlation(stat, metric_a, human) -
                                   Correlation(stat, metric_b, human));
  const std::size_t n = metric_a.size();
  std::vector<char> hit(iterations, 0);

  // One contiguous block of iterations per worker, each with its own scratch.
  const std::size_t blocks =
      std::min<std::size_t>(ResolveJobs(jobs), static_cast<std::size_t>(iterations));
  ParallelFor(blocks, jobs, [&](std::size_t blk) {
    std::vector<char> swap(n);
    std::vector<double> pa(n), pb(n);
    const std::size_t begin = iterations * blk / blocks;
    const std::size_t end = iterations * (blk + 1) / blocks;
    for (std::size_t it = begin; it < end; ++it) {
      DrawSwaps(seed, it, &swap);
      double delta = SwappedDelta(metric_a, metric_b, human, stat, swap, &pa, &pb);
      hit[it] = delta >= observed - kDeltaTieTolerance;
    }
  });
  const std::int64_t count = std::count(hit.begin(), hit.end(), 1);
  return Finish(observed, count, iterations, seed);
}

SignificanceResult PermutationTestWithPatterns(
    std::span<const double> metric_a, std::span<const double> metric_b,
    std::span<const double> human, CorrelationStat stat,
    std::span<const std::vector<char>> patterns) {
  CheckTestInputs(metric_a, metric_b, human);
  if (patterns.empty()) throw std::invalid_argument("no swap patterns given");
  const double observed = std::abs(Correlation(stat, metric_a, human) -
                                   Correlation(stat, metric_b, human));
  const std::size_t n = metric_a.size();
  std::vector<double> pa(n), pb(n);
  std::int64_t count = 0;
  for (const std::vector<char> &swap : patterns) {
    if (swap.size() != n) {
      throw std::invalid_argument("swap pattern length differs from input");
    }
    double delta = SwappedDelta(metric_a, metric_b, human, stat, swap, &pa, &pb);
    if (delta >= observed - kDeltaTieTolerance) ++count;
  }
  return Finish(observed, count, static_cast<std::int64_t>(patterns.size()), 0);
}

std::vector<std::vector<char>> AllSwapPatterns(std::size_t n) {
  if (n > 20) throw std::invalid_argument("too many instances to enumerate");
  std::vector<std::vector<char>> patterns;
  patterns.reserve(std::size_t{1} << n);
  for (std::size_t k = 0; k < (std::size_t{1} << n); ++k) {
    std::vector<char> swap(n);
    for (std::size_t i = 0; i < n; ++i) swap[i] = static_cast<char>((k >> i) & 1);
    patterns.push_back(std::move(swap));
  }
  return patterns;
}

std::vector<BonferroniDecision> Bonferroni(std::span<const double> p_values,
                                           double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw std::invalid_argument("alpha must lie in (0, 1)");
  }
  if (p_values.empty()) throw std::invalid_argument("no p-values given");
  const double adjusted = alpha / static_cast<double>(p_values.size());
  std::vector<BonferroniDecision> out;
  out.reserve(p_values.size());
  for (double p : p_values) out.push_back({adjusted, p < adjusted});
  return out;
}

nlohmann::json SignificanceResult::ToJson() const {
  return {{"observed_delta", observed_delta},
          {"p_value", p_value},
          {"count_ge", count_ge},
          {"iterations", iterations},
          {"seed", seed}};
}

}  // namespace srlscore
