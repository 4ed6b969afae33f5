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
#include <filesystem>
#include <fstream>
#include <optional>

#include <nlohmann/json.hpp>

#include "srlscore/errors.h"
#include "srlscore/logging.h"
#include "srlscore/parallel.h"
#include "srlscore/stats.h"

namespace srlscore {

std::vector<RatedSample> ReadRatedSamples(std::istream &in,
                                          const std::string &name) {
  std::vector<RatedSample> samples;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const std::string where = name + ":" + std::to_string(line_no);
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error &e) {
      throw ValidationError(where + ": " + e.what());
    }
    try {
      RatedSample s;
      s.sample_id = j.at("sample_id").is_string()
                        ? j.at("sample_id").get<std::string>()
                        : j.at("sample_id").dump();
      s.source = j.at("source").get<std::string>();
      s.summary = j.at("summary").get<std::string>();
      s.human_score = j.at("human_score").get<double>();
      if (!std::isfinite(s.human_score)) {
        throw ValidationError(where + ": human_score must be finite");
      }
      samples.push_back(std::move(s));
    } catch (const nlohmann::json::exception &e) {
      throw ValidationError(where + ": " + e.what());
    }
  }
  return samples;
}

std::vector<RatedSample> LoadRatedSamples(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw IoError(path + ": cannot open dataset");
  return ReadRatedSamples(in, path);
}

EvalReport EvaluateDataset(const std::vector<RatedSample> &samples,
                           const Scorer &scorer, const DocumentLoader &loader,
                           int jobs) {
  std::vector<std::optional<double>> metric(samples.size());
  std::vector<std::string> errors(samples.size());
  ParallelFor(samples.size(), jobs, [&](std::size_t i) {
    try {
      AnnotatedDocument source = loader(samples[i].source);
      AnnotatedDocument summary = loader(samples[i].summary);
      metric[i] = scorer.Score(source, summary).overall;
    } catch (const std::exception &e) {
      errors[i] = e.what();
    }
  });

  EvalReport report;
  std::vector<double> x, y;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    if (!metric[i]) {
      Log()->warn("excluding sample {}: {}", samples[i].sample_id, errors[i]);
      report.excluded.push_back({samples[i].sample_id, errors[i]});
      continue;
    }
    report.per_sample.push_back(
        {samples[i].sample_id, *metric[i], samples[i].human_score});
    x.push_back(*metric[i]);
    y.push_back(samples[i].human_score);
  }
  report.n = x.size();
  report.pearson = Pearson(x, y);
  report.spearman = Spearman(x, y);
  return report;
}

EvalReport EvaluateDataset(const std::vector<RatedSample> &samples,
                           const Scorer &scorer,
                           const std::string &annotation_dir, int jobs) {
  namespace fs = std::filesystem;
  DocumentLoader loader = [&](const std::string &name) {
    fs::path p(name);
    if (p.is_relative()) p = fs::path(annotation_dir) / p;
    return LoadDocument(p.string());
  };
  return EvaluateDataset(samples, scorer, loader, jobs);
}

nlohmann::json EvalReport::ToJson() const {
  nlohmann::json samples = nlohmann::json::array();
  for (const SampleScore &s : per_sample) {
    samples.push_back(
        {{"sample_id", s.sample_id}, {"metric", s.metric}, {"human", s.human}});
  }
  nlohmann::json failures = nlohmann::json::array();
  for (const SampleFailure &f : excluded) {
    failures.push_back({{"sample_id", f.sample_id}, {"error", f.error}});
  }
  return {{"pearson", pearson},
          {"spearman", spearman},
          {"n", n},
          {"excluded_count", excluded.size()},
          {"excluded", std::move(failures)},
          {"per_sample", std::move(samples)}};
}

}  // namespace srlscore
