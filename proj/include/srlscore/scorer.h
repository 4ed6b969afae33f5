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

// Factual-consistency scoring by weighted fact tuple matching.
//
// Each summary tuple is compared with every source tuple; its score is the
// best weighted role agreement it achieves, and the summary score is the
// mean over summary tuples. For a summary tuple s and source tuple r:
//
//   support(s | r) = sum_i [s_i present] * sim(s_i, r_i) * w_i
//
// with sim(x, absent) = 0. Dynamic weighting divides the support by the
// total weight of the roles present in s, so omitted roles cost nothing
// while wrong ones still do.

#ifndef SRLSCORE_SCORER_H_
#define SRLSCORE_SCORER_H_

#include <array>
#include <memory>
#include <optional>
#include <string_view>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "srlscore/document.h"
#include "srlscore/fact_tuple.h"
#include "srlscore/similarity.h"

namespace srlscore {

using RoleWeights = std::array<double, kNumRoles>;

enum class WeightingMode { kStatic, kDynamic };

// kFull: seven-role tuples. kTriplet: (agent, relation, patient) tuples with
// the same matching. kGoodrich: triplets, but only source tuples whose agent
// and relation match exactly are considered, and only the patient is scored.
enum class Variant { kFull, kTriplet, kGoodrich };

WeightingMode ParseWeightingMode(std::string_view name);
std::string_view WeightingModeName(WeightingMode mode);
Variant ParseVariant(std::string_view name);
std::string_view VariantName(Variant variant);

// 1/7 on every role.
RoleWeights EqualWeights();
// 1/3 on agent, relation and patient.
RoleWeights TripletWeights();

struct ScoringConfig {
  RoleWeights weights = EqualWeights();
  WeightingMode weighting = WeightingMode::kDynamic;
  SimilarityKind similarity = SimilarityKind::kExact;
  std::shared_ptr<const EmbeddingTable> embeddings;
  Variant variant = Variant::kFull;
  bool coref = false;
  int coref_cap = 64;

  // Throws ConfigError: negative weights, sum off 1 by more than 1e-9,
  // non-zero weights outside the triplet roles for kTriplet/kGoodrich,
  // vector similarity without embeddings, coref_cap < 1.
  void Validate() const;
};

inline constexpr double kWeightSumTolerance = 1e-9;

struct TupleMatch {
  FactTuple summary_tuple;
  std::optional<std::size_t> best_source;  // index into the source database
  std::optional<FactTuple> source_tuple;
  double score = 0.0;
  // sim(summary_i, source_i) for present summary roles, 0 elsewhere.
  std::array<double, kNumRoles> role_similarity{};
};

struct ScoreReport {
  double overall = 0.0;
  // True when the summary produced no tuples; overall is then 0.
  bool empty_summary = false;
  std::size_t source_tuples = 0;
  std::vector<TupleMatch> matches;

  nlohmann::json ToJson() const;
};

class Scorer {
 public:
  // Validates the config (throws ConfigError).
  explicit Scorer(ScoringConfig config);

  const ScoringConfig &config() const { return config_; }
  const Similarity &similarity() const { return similarity_; }

  // Support of `summary` given `source`, re-normalized in dynamic mode.
  // Terms are accumulated in role order; the dynamic score is the static sum
  // divided by the present-role weight total (0 when that total is 0).
  double ScorePair(const FactTuple &summary, const FactTuple &source,
                   std::array<double, kNumRoles> *role_similarity = nullptr) const;

  // Mean over summary tuples of the best score against any source tuple.
  // Ties resolve to the lowest source index. Summary tuples are scored on up
  // to `jobs` threads; the result does not depend on `jobs`.
  ScoreReport ScoreSummary(const FactDatabase &source,
                           const FactDatabase &summary, int jobs = 1) const;

  // Filtered matching: candidates are the source tuples whose agent and
  // relation equal the summary tuple's (absent equals absent). The tuple
  // score is the best patient similarity among candidates, 0 without
  // candidates, and 1 when the summary tuple has no patient.
  ScoreReport ScoreGoodrich(const FactDatabase &source,
                            const FactDatabase &summary, int jobs = 1) const;

  // Extraction, optional coref expansion and triplet reduction per config.
  FactDatabase PrepareDatabase(const AnnotatedDocument &doc) const;

  // End to end: prepares both documents and dispatches on the variant.
  ScoreReport Score(const AnnotatedDocument &source,
                    const AnnotatedDocument &summary, int jobs = 1) const;

 private:
  ScoringConfig config_;
  Similarity similarity_;
};

}  // namespace srlscore

#endif  // SRLSCORE_SCORER_H_
