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

// Python bindings. Documents and reports cross the boundary as JSON text;
// the pure-Python wrapper in srlscore/__init__.py decodes them.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "srlscore/coref.h"
#include "srlscore/document.h"
#include "srlscore/errors.h"
#include "srlscore/fact_tuple.h"
#include "srlscore/scorer.h"
#include "srlscore/similarity.h"
#include "srlscore/stats.h"

namespace py = pybind11;

namespace srlscore {
namespace {

ScoringConfig MakeConfig(const std::string &similarity,
                         const std::string &weighting,
                         const std::string &variant,
                         const std::optional<std::vector<double>> &weights,
                         bool coref, int coref_cap,
                         const std::optional<std::string> &embeddings) {
  ScoringConfig config;
  config.similarity = ParseSimilarityKind(similarity);
  config.weighting = ParseWeightingMode(weighting);
  config.variant = ParseVariant(variant);
  config.coref = coref;
  config.coref_cap = coref_cap;
  if (weights) {
    if (weights->size() != kNumRoles) {
      throw ConfigError("weights must have 7 entries");
    }
    std::copy(weights->begin(), weights->end(), config.weights.begin());
  } else if (config.variant != Variant::kFull) {
    config.weights = TripletWeights();
  }
  if (embeddings) {
    config.embeddings =
        std::make_shared<EmbeddingTable>(EmbeddingTable::Load(*embeddings));
  }
  return config;
}

std::string Score(const std::string &source, const std::string &summary,
                  const std::string &similarity, const std::string &weighting,
                  const std::string &variant,
                  const std::optional<std::vector<double>> &weights, bool coref,
                  int coref_cap, const std::optional<std::string> &embeddings,
                  int jobs) {
  py::gil_scoped_release release;
  Scorer scorer(MakeConfig(similarity, weighting, variant, weights, coref,
                           coref_cap, embeddings));
  ScoreReport report =
      scorer.Score(ParseDocument(source), ParseDocument(summary), jobs);
  return report.ToJson().dump();
}

std::string Extract(const std::string &document, const std::string &variant,
                    bool coref, int coref_cap) {
  ScoringConfig config;
  config.variant = ParseVariant(variant);
  if (config.variant != Variant::kFull) config.weights = TripletWeights();
  config.coref = coref;
  config.coref_cap = coref_cap;
  return DatabaseToJson(Scorer(config).PrepareDatabase(ParseDocument(document)))
      .dump();
}

}  // namespace
}  // namespace srlscore

PYBIND11_MODULE(_srlscore, m) {
  using namespace srlscore;
  m.doc() = "Reference-free factual consistency scoring over semantic roles.";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<ValidationError>(m, "ValidationError",
                                          PyExc_ValueError);
  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<UndefinedCorrelationError>(
      m, "UndefinedCorrelationError", PyExc_ValueError);
  py::register_exception<IoError>(m, "IoError", PyExc_OSError);

  m.def(
      "validate_document",
      [](const std::string &text) {
        return SerializeDocument(ParseDocument(text));
      },
      py::arg("text"),
      "Parses and validates an annotated document; returns it re-serialized.");
  m.def("extract_tuples", &Extract, py::arg("document"),
        py::arg("variant") = "full", py::arg("coref") = false,
        py::arg("coref_cap") = kDefaultCorefCap);
  m.def("score", &Score, py::arg("source"), py::arg("summary"),
        py::arg("similarity") = "exact", py::arg("weighting") = "dynamic",
        py::arg("variant") = "full", py::arg("weights") = py::none(),
        py::arg("coref") = false, py::arg("coref_cap") = kDefaultCorefCap,
        py::arg("embeddings") = py::none(), py::arg("jobs") = 1);
  m.def(
      "pearson",
      [](const std::vector<double> &x, const std::vector<double> &y) {
        return Pearson(x, y);
      },
      py::arg("x"), py::arg("y"));
  m.def(
      "spearman",
      [](const std::vector<double> &x, const std::vector<double> &y) {
        return Spearman(x, y);
      },
      py::arg("x"), py::arg("y"));
  m.def(
      "permutation_test",
      [](const std::vector<double> &a, const std::vector<double> &b,
         const std::vector<double> &human, const std::string &stat,
         int iterations, std::uint64_t seed, int jobs) {
        CorrelationStat s = ParseCorrelationStat(stat);
        py::gil_scoped_release release;
        return PermutationTest(a, b, human, s, iterations, seed, jobs)
            .ToJson()
            .dump();
      },
      py::arg("metric_a"), py::arg("metric_b"), py::arg("human"),
      py::arg("stat") = "pearson", py::arg("iterations") = kDefaultIterations,
      py::arg("seed") = kDefaultSeed, py::arg("jobs") = 1);
  m.def(
      "bonferroni",
      [](const std::vector<double> &p_values, double alpha) {
        std::vector<std::pair<double, bool>> out;
        for (const BonferroniDecision &d : Bonferroni(p_values, alpha)) {
          out.emplace_back(d.adjusted_alpha, d.significant);
        }
        return out;
      },
      py::arg("p_values"), py::arg("alpha") = 0.05);
}
