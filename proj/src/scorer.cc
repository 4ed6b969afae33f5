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

#include "srlscore/scorer.h"

#include <cmath>
#include <string>

#include <nlohmann/json.hpp>

#include "srlscore/coref.h"
#include "srlscore/errors.h"
#include "srlscore/parallel.h"

namespace srlscore {

WeightingMode ParseWeightingMode(std::string_view name) {
  if (name == "static") return WeightingMode::kStatic;
  if (name == "dynamic") return WeightingMode::kDynamic;
  throw ConfigError("unknown weighting \"" + std::string(name) +
                    "\" (expected static or dynamic)");
}

std::string_view WeightingModeName(WeightingMode mode) {
  return mode == WeightingMode::kStatic ? "static" : "dynamic";
}

Variant ParseVariant(std::string_view name) {
  if (name == "full") return Variant::kFull;
  if (name == "triplet") return Variant::kTriplet;
  if (name == "goodrich") return Variant::kGoodrich;
  throw ConfigError("unknown variant \"" + std::string(name) +
                    "\" (expected full, triplet or goodrich)");
}

std::string_view VariantName(Variant variant) {
  switch (variant) {
    case Variant::kFull: return "full";
    case Variant::kTriplet: return "triplet";
    case Variant::kGoodrich: return "goodrich";
  }
  return "unknown";
}

RoleWeights EqualWeights() {
  RoleWeights w;
  w.fill(1.0 / kNumRoles);
  return w;
}

RoleWeights TripletWeights() {
  RoleWeights w{};
  w[static_cast<int>(Role::kAgent)] = 1.0 / 3.0;
  w[static_cast<int>(Role::kRelation)] = 1.0 / 3.0;
  w[static_cast<int>(Role::kPatient)] = 1.0 / 3.0;
  return w;
}

namespace {

bool IsTripletRole(int i) {
  Role r = static_cast<Role>(i);
  return r == Role::kAgent || r == Role::kRelation || r == Role::kPatient;
}

}  // namespace

void ScoringConfig::Validate() const {
  double sum = 0.0;
  for (int i = 0; i < kNumRoles; ++i) {
    if (!(weights[i] >= 0.0) || !std::isfinite(weights[i])) {
      throw ConfigError("weight for " + std::string(RoleName(static_cast<Role>(i))) +
                        " must be a finite non-negative number");
    }
    if (variant != Variant::kFull && !IsTripletRole(i) && weights[i] != 0.0) {
      throw ConfigError("variant " + std::string(VariantName(variant)) +
                        " requires a zero weight for " +
                        std::string(RoleName(static_cast<Role>(i))));
    }
    sum += weights[i];
  }
  if (std::abs(sum - 1.0) > kWeightSumTolerance) {
    throw ConfigError("weights must sum to 1 (got " + std::to_string(sum) + ")");
  }
  if (similarity == SimilarityKind::kVectorCosine && !embeddings) {
    throw ConfigError("vector similarity requires an embedding table");
  }
  if (coref_cap < 1) throw ConfigError("coref cap must be at least 1");
}

Scorer::Scorer(ScoringConfig config)
    : config_((config.Validate(), std::move(config))),
      similarity_(config_.similarity, config_.embeddings) {}

double Scorer::ScorePair(const FactTuple &summary, const FactTuple &source,
                         std::array<double, kNumRoles> *role_similarity) const {
  double support = 0.0;
  double present_weight = 0.0;
  for (int i = 0; i < kNumRoles; ++i) {
    const RoleValue &s = summary.roles[i];
    double sim = 0.0;
    if (s.present()) {
      const RoleValue &r = source.roles[i];
      if (r.present()) sim = similarity_(s.text, r.text);
      support += sim * config_.weights[i];
      present_weight += config_.weights[i];
    }
    if (role_similarity) (*role_similarity)[i] = sim;
  }
  if (config_.weighting == WeightingMode::kStatic) return support;
  return present_weight > 0.0 ? support / present_weight : 0.0;
}

namespace {

ScoreReport Finish(std::vector<TupleMatch> matches, const FactDatabase &source) {
  ScoreReport report;
  report.source_tuples = source.size();
  report.empty_summary = matches.empty();
  double total = 0.0;
  for (const TupleMatch &m : matches) total += m.score;
  report.overall =
      matches.empty() ? 0.0 : total / static_cast<double>(matches.size());
  report.matches = std::move(matches);
  return report;
}

}  // namespace

ScoreReport Scorer::ScoreSummary(const FactDatabase &source,
                                 const FactDatabase &summary, int jobs) const {
  std::vector<TupleMatch> matches(summary.size());
  ParallelFor(summary.size(), jobs, [&](std::size_t k) {
    TupleMatch &m = matches[k];
    m.summary_tuple = summary.tuples[k];
    double best = -1.0;
    for (std::size_t r = 0; r < source.size(); ++r) {
      double score = ScorePair(m.summary_tuple, source.tuples[r]);
      if (score > best) {
        best = score;
        m.best_source = r;
      }
    }
    if (m.best_source) {
      m.score = best;
      m.source_tuple = source.tuples[*m.best_source];
      ScorePair(m.summary_tuple, *m.source_tuple, &m.role_similarity);
    }
  });
  return Finish(std::move(matches), source);
}

ScoreReport Scorer::ScoreGoodrich(const FactDatabase &source,
                                  const FactDatabase &summary, int jobs) const {
  std::vector<TupleMatch> matches(summary.size());
  ParallelFor(summary.size(), jobs, [&](std::size_t k) {
    TupleMatch &m = matches[k];
    m.summary_tuple = summary.tuples[k];
    const FactTuple &s = m.summary_tuple;
    const RoleValue &patient = s[Role::kPatient];
    double best = -1.0;
    for (std::size_t r = 0; r < source.size(); ++r) {
      const FactTuple &candidate = source.tuples[r];
      if (candidate[Role::kAgent].text != s[Role::kAgent].text ||
          candidate[Role::kRelation].text != s[Role::kRelation].text) {
        continue;
      }
      double score = 1.0;
      if (patient.present()) {
        const RoleValue &other = candidate[Role::kPatient];
        score = other.present() ? similarity_(patient.text, other.text) : 0.0;
      }
      if (score > best) {
        best = score;
        m.best_source = r;
      }
    }
    if (m.best_source) {
      m.score = best;
      m.source_tuple = source.tuples[*m.best_source];
      if (s[Role::kAgent].present()) {
        m.role_similarity[static_cast<int>(Role::kAgent)] = 1.0;
      }
      m.role_similarity[static_cast<int>(Role::kRelation)] = 1.0;
      if (patient.present()) {
        m.role_similarity[static_cast<int>(Role::kPatient)] = best;
      }
    }
  });
  return Finish(std::move(matches), source);
}

FactDatabase Scorer::PrepareDatabase(const AnnotatedDocument &doc) const {
  FactDatabase db = ExtractTuples(doc);
  if (config_.coref) {
    db = ExpandTuples(db, EntityDictionary::Build(doc), doc, config_.coref_cap);
  }
  if (config_.variant != Variant::kFull) db = ReduceToTriplets(db);
  return db;
}

ScoreReport Scorer::Score(const AnnotatedDocument &source,
                          const AnnotatedDocument &summary, int jobs) const {
  FactDatabase source_db = PrepareDatabase(source);
  FactDatabase summary_db = PrepareDatabase(summary);
  if (config_.variant == Variant::kGoodrich) {
    return ScoreGoodrich(source_db, summary_db, jobs);
  }
  return ScoreSummary(source_db, summary_db, jobs);
}

nlohmann::json ScoreReport::ToJson() const {
  nlohmann::json tuples = nlohmann::json::array();
  for (const TupleMatch &m : matches) {
    nlohmann::json sims = nlohmann::json::object();
    for (Role r : kAllRoles) {
      sims[std::string(RoleName(r))] = m.role_similarity[static_cast<int>(r)];
    }
    tuples.push_back(
        {{"summary_tuple", TupleToJson(m.summary_tuple)},
         {"best_source",
          m.best_source ? nlohmann::json(*m.best_source) : nlohmann::json()},
         {"source_tuple",
          m.source_tuple ? TupleToJson(*m.source_tuple) : nlohmann::json()},
         {"score", m.score},
         {"role_similarity", std::move(sims)}});
  }
  return {{"overall", overall},
          {"empty_summary", empty_summary},
          {"source_tuples", source_tuples},
          {"summary_tuples", matches.size()},
          {"tuples", std::move(tuples)}};
}

}  // namespace srlscore
