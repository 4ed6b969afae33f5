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

#ifndef SRLSCORE_EVALUATION_H_
#define SRLSCORE_EVALUATION_H_

#include <functional>
#include <istream>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "srlscore/document.h"
#include "srlscore/scorer.h"

namespace srlscore {

// One rated (source, summary) pair. `source` and `summary` name annotation
// files, relative to the annotation directory unless absolute.
struct RatedSample {
  std::string sample_id;
  std::string source;
  std::string summary;
  double human_score = 0.0;
};

// JSON lines, one {"sample_id", "source", "summary", "human_score"} object
// per line; blank lines are skipped. Throws ValidationError naming the line.
std::vector<RatedSample> ReadRatedSamples(std::istream &in,
                                          const std::string &name);
std::vector<RatedSample> LoadRatedSamples(const std::string &path);

struct SampleScore {
  std::string sample_id;
  double metric = 0.0;
  double human = 0.0;
};

struct SampleFailure {
  std::string sample_id;
  std::string error;
};

struct EvalReport {
  double pearson = 0.0;
  double spearman = 0.0;
  std::size_t n = 0;
  std::vector<SampleScore> per_sample;
  std::vector<SampleFailure> excluded;

  nlohmann::json ToJson() const;
};

using DocumentLoader = std::function<AnnotatedDocument(const std::string &)>;

// Scores every sample and correlates metric with human scores. Samples whose
// documents fail to load are excluded and listed in the report. Throws
// UndefinedCorrelationError if the surviving scores are constant and
// std::invalid_argument if fewer than two samples survive.
EvalReport EvaluateDataset(const std::vector<RatedSample> &samples,
                           const Scorer &scorer, const DocumentLoader &loader,
                           int jobs = 1);

// Loads documents from `annotation_dir`.
EvalReport EvaluateDataset(const std::vector<RatedSample> &samples,
                           const Scorer &scorer,
                           const std::string &annotation_dir, int jobs = 1);

}  // namespace srlscore

#endif  // SRLSCORE_EVALUATION_H_
