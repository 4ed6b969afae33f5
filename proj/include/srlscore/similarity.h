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

// Pairwise argument similarity. All functions take normalized strings and
// return a value in [0, 1].

#ifndef SRLSCORE_SIMILARITY_H_
#define SRLSCORE_SIMILARITY_H_

#include <istream>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace srlscore {

// Dense word vectors, all of one dimension. Immutable after construction.
class EmbeddingTable {
 public:
  explicit EmbeddingTable(int dimension);

  // Text format: one token per line followed by `dimension` floats. An
  // optional word2vec-style "<count> <dimension>" header line is skipped.
  // Throws IoError if the file cannot be opened and ValidationError (with
  // the line number) on malformed or ragged rows.
  static EmbeddingTable Load(const std::string &path);
  static EmbeddingTable Read(std::istream &in, const std::string &name);

  // Adds or replaces a vector. Throws ConfigError on dimension mismatch.
  void Add(const std::string &token, std::span<const double> vector);

  int dimension() const { return dimension_; }
  std::size_t size() const { return index_.size(); }

  // nullptr for out-of-vocabulary tokens.
  const double *Find(std::string_view token) const;

 private:
  int dimension_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<double> data_;
};

enum class SimilarityKind { kExact, kUnigramPrecision, kVectorCosine };

// "exact", "rouge" (unigram precision), "vector".
SimilarityKind ParseSimilarityKind(std::string_view name);
std::string_view SimilarityKindName(SimilarityKind kind);

// 1 if byte-equal, else 0.
double SimExact(std::string_view a, std::string_view b);

// Clipped unigram matches divided by the candidate's token count.
// Directional: `candidate` is the summary argument, `reference` the source
// argument. An empty candidate scores 0.
double SimUnigramPrecision(std::string_view candidate,
                           std::string_view reference);

// Cosine of the mean token vectors, clamped to [0, 1]. OOV tokens count as
// zero vectors; an all-zero mean gives 0.
double SimVector(std::string_view a, std::string_view b,
                 const EmbeddingTable &table);

// A configured similarity function. Reentrant and cheap to copy.
class Similarity {
 public:
  // Throws ConfigError when kVectorCosine is requested without a table.
  explicit Similarity(SimilarityKind kind = SimilarityKind::kExact,
                      std::shared_ptr<const EmbeddingTable> table = nullptr);

  double operator()(std::string_view summary_arg,
                    std::string_view source_arg) const;

  SimilarityKind kind() const { return kind_; }

 private:
  SimilarityKind kind_;
  std::shared_ptr<const EmbeddingTable> table_;
};

}  // namespace srlscore

#endif  // SRLSCORE_SIMILARITY_H_
