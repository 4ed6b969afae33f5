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

#include "srlscore/evaluation.h"

#include <cmath>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "srlscore/errors.h"
#include "srlscore/stats.h"
#include "srlscore/text.h"
#include "test_util.h"

namespace srlscore {
namespace {

using testing::DataPath;

// "<agent> <verb> <patient>" as a one-frame document.
AnnotatedDocument OneFrame(const std::string &id, const std::string &agent,
                           const std::string &verb, const std::string &patient) {
  Sentence s;
  for (auto t : SplitWhitespace(agent)) s.tokens.emplace_back(t);
  int a_end = static_cast<int>(s.tokens.size());
  s.tokens.push_back(verb);
  for (auto t : SplitWhitespace(patient)) s.tokens.emplace_back(t);
  int n = static_cast<int>(s.tokens.size());
  s.frames.push_back({a_end, "", {{"ARG0", 0, a_end}, {"ARG1", a_end + 1, n}}});
  return {id, {s}, {}};
}

class MapLoader {
 public:
  void Add(AnnotatedDocument doc) { docs_[doc.doc_id] = std::move(doc); }
  AnnotatedDocument operator()(const std::string &name) const {
    auto it = docs_.find(name);
    if (it == docs_.end()) throw IoError(name + ": cannot open file");
    return it->second;
  }

 private:
  std::map<std::string, AnnotatedDocument> docs_;
};

Scorer RougeScorer() {
  ScoringConfig config;
  config.similarity = SimilarityKind::kUnigramPrecision;
  return Scorer(config);
}

TEST(EvaluationTest, ReadsJsonLines) {
  std::istringstream in(
      "{\"sample_id\":\"a\",\"source\":\"s.json\",\"summary\":\"t.json\","
      "\"human_score\":0.5}\n\n"
      "{\"sample_id\":7,\"source\":\"s.json\",\"summary\":\"u.json\","
      "\"human_score\":1}\n");
  auto samples = ReadRatedSamples(in, "inline");
  ASSERT_EQ(samples.size(), 2u);
  EXPECT_EQ(samples[1].sample_id, "7");
  EXPECT_EQ(samples[1].human_score, 1.0);
}

TEST(EvaluationTest, BadLineIsNamed) {
  std::istringstream in("{\"sample_id\":\"a\"}\n");
  try {
    ReadRatedSamples(in, "data.jsonl");
    FAIL();
  } catch (const ValidationError &e) {
    EXPECT_NE(std::string(e.what()).find("data.jsonl:1"), std::string::npos)
        << e.what();
  }
}

TEST(EvaluationTest, TwoSamplesMatchingHumanGivePearsonOne) {
  MapLoader loader;
  loader.Add(OneFrame("src", "mary", "read", "the big red book"));
  loader.Add(OneFrame("good", "mary", "read", "the book"));
  loader.Add(OneFrame("bad", "tom", "read", "a car"));
  std::vector<RatedSample> samples = {{"1", "src", "good", 1.0},
                                      {"2", "src", "bad", 1.0 / 3.0}};
  EvalReport r = EvaluateDataset(samples, RougeScorer(), std::cref(loader));
  EXPECT_NEAR(r.pearson, 1.0, 1e-12);
  EXPECT_EQ(r.n, 2u);
  EXPECT_EQ(r.per_sample[0].metric, 1.0);
  EXPECT_NEAR(r.per_sample[1].metric, 1.0 / 3.0, 1e-15);
}

TEST(EvaluationTest, ConstantMetricIsUndefined) {
  MapLoader loader;
  loader.Add(OneFrame("src", "mary", "read", "a book"));
  std::vector<RatedSample> samples = {{"1", "src", "src", 0.2},
                                      {"2", "src", "src", 0.9}};
  EXPECT_THROW(EvaluateDataset(samples, RougeScorer(), std::cref(loader)),
               UndefinedCorrelationError);
}

TEST(EvaluationTest, MissingAnnotationIsExcluded) {
  MapLoader loader;
  loader.Add(OneFrame("src", "mary", "read", "the big red book"));
  loader.Add(OneFrame("good", "mary", "read", "the book"));
  loader.Add(OneFrame("bad", "tom", "read", "a car"));
  std::vector<RatedSample> samples = {{"1", "src", "good", 0.9},
                                      {"2", "src", "missing", 0.5},
                                      {"3", "src", "bad", 0.1},
                                      {"4", "src", "src", 1.0}};
  EvalReport r = EvaluateDataset(samples, RougeScorer(), std::cref(loader), 2);
  EXPECT_EQ(r.n, 3u);
  ASSERT_EQ(r.excluded.size(), 1u);
  EXPECT_EQ(r.excluded[0].sample_id, "2");
  EXPECT_NE(r.excluded[0].error.find("missing"), std::string::npos);
  nlohmann::json j = r.ToJson();
  EXPECT_EQ(j["excluded_count"], 1);
  EXPECT_EQ(j["per_sample"].size(), 3u);
}

TEST(EvaluationTest, TenSampleFixtureMatchesComposedOracle) {
  const std::vector<std::string> patients = {
      "the old red book", "the book", "a red car", "the old car", "books",
      "the old red book today", "red", "a book", "the car", "old red"};
  const std::vector<double> human = {1.0, 0.9, 0.2, 0.4, 0.1,
                                     0.8, 0.6, 0.5, 0.3, 0.7};
  MapLoader loader;
  AnnotatedDocument source = OneFrame("src", "mary", "read", "the old red book");
  loader.Add(source);
  std::vector<RatedSample> samples;
  std::vector<double> expected;
  for (std::size_t i = 0; i < patients.size(); ++i) {
    std::string id = "sum" + std::to_string(i);
    AnnotatedDocument summary =
        OneFrame(id, i % 3 == 0 ? "mary" : "tom", "read", patients[i]);
    loader.Add(summary);
    samples.push_back({std::to_string(i), "src", id, human[i]});
    expected.push_back(testing::OracleScore(
        ExtractTuples(source), ExtractTuples(summary), EqualWeights(),
        WeightingMode::kDynamic, SimUnigramPrecision));
  }
  EvalReport r = EvaluateDataset(samples, RougeScorer(), std::cref(loader), 3);
  ASSERT_EQ(r.n, 10u);
  for (std::size_t i = 0; i < 10; ++i) {
    EXPECT_EQ(r.per_sample[i].sample_id, std::to_string(i));
    EXPECT_EQ(r.per_sample[i].metric, expected[i]) << i;
    EXPECT_EQ(r.per_sample[i].human, human[i]);
  }
  EXPECT_NEAR(r.pearson, Pearson(expected, human), 1e-15);
  EXPECT_NEAR(r.spearman, Spearman(expected, human), 1e-15);
}

TEST(EvaluationTest, DirectoryLoaderResolvesRelativePaths) {
  std::vector<RatedSample> samples = {
      {"1", "mueller_gave.json", "mueller_gave.json", 1.0},
      {"2", "mueller_gave.json", "no_frames.json", 0.0}};
  EvalReport r =
      EvaluateDataset(samples, RougeScorer(), std::string(SRLSCORE_TEST_DATA));
  EXPECT_EQ(r.n, 2u);
  EXPECT_NEAR(r.pearson, 1.0, 1e-12);
}

}  // namespace
}  // namespace srlscore
