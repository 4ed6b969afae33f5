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

#include "srlscore/similarity.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>

#include "srlscore/errors.h"
#include "srlscore/text.h"

namespace srlscore {

EmbeddingTable::EmbeddingTable(int dimension) : dimension_(dimension) {
  if (dimension <= 0) throw ConfigError("embedding dimension must be positive");
}

EmbeddingTable EmbeddingTable::Load(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw IoError(path + ": cannot open embedding file");
  return Read(in, path);
}

namespace {

bool ParseDouble(std::string_view s, double *out) {
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), *out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

bool IsCountHeader(const std::vector<std::string_view> &fields) {
  if (fields.size() != 2) return false;
  for (std::string_view f : fields) {
    if (f.empty() || !std::all_of(f.begin(), f.end(),
                                  [](char c) { return c >= '0' && c <= '9'; })) {
      return false;
    }
  }
  return true;
}

}  // namespace

EmbeddingTable EmbeddingTable::Read(std::istream &in, const std::string &name) {
  std::string line;
  int line_no = 0;
  std::vector<double> values;
  std::unique_ptr<EmbeddingTable> table;
  while (std::getline(in, line)) {
    ++line_no;
    std::vector<std::string_view> fields = SplitWhitespace(line);
    if (fields.empty()) continue;
    if (line_no == 1 && IsCountHeader(fields)) continue;
    if (fields.size() < 2) {
      throw ValidationError(name + ":" + std::to_string(line_no) +
                            ": expected a token followed by floats");
    }
    values.clear();
    for (std::size_t i = 1; i < fields.size(); ++i) {
      double v;
      if (!ParseDouble(fields[i], &v)) {
        throw ValidationError(name + ":" + std::to_string(line_no) +
                              ": bad number \"" + std::string(fields[i]) + "\"");
      }
      values.push_back(v);
    }
    if (!table) {
      table = std::make_unique<EmbeddingTable>(static_cast<int>(values.size()));
    } else if (static_cast<int>(values.size()) != table->dimension()) {
      throw ValidationError(name + ":" + std::to_string(line_no) +
                            ": expected " + std::to_string(table->dimension()) +
                            " values, got " + std::to_string(values.size()));
    }
    table->Add(std::string(fields[0]), values);
  }
  if (!table) throw ValidationError(name + ": no embeddings found");
  return std::move(*table);
}

void EmbeddingTable::Add(const std::string &token,
                         std::span<const double> vector) {
  if (static_cast<int>(vector.size()) != dimension_) {
    throw ConfigError("embedding for \"" + token + "\" has dimension " +
                      std::to_string(vector.size()) + ", expected " +
                      std::to_string(dimension_));
  }
  auto [it, inserted] = index_.emplace(token, data_.size() / dimension_);
  if (inserted) {
    data_.insert(data_.end(), vector.begin(), vector.end());
  } else {
    std::copy(vector.begin(), vector.end(),
              data_.begin() + it->second * dimension_);
  }
}

const double *EmbeddingTable::Find(std::string_view token) const {
  auto it = index_.find(std::string(token));
  return it == index_.end() ? nullptr : data_.data() + it->second * dimension_;
}

SimilarityKind ParseSimilarityKind(std::string_view name) {
  if (name == "exact") return SimilarityKind::kExact;
  if (name == "rouge") return SimilarityKind::kUnigramPrecision;
  if (name == "vector") return SimilarityKind::kVectorCosine;
  throw ConfigError("unknown similarity \"" + std::string(name) +
                    "\" (expected exact, rouge or vector)");
}

std::string_view SimilarityKindName(SimilarityKind kind) {
  switch (kind) {
    case SimilarityKind::kExact: return "exact";
    case SimilarityKind::kUnigramPrecision: return "rouge";
    case SimilarityKind::kVectorCosine: return "vector";
  }
  return "unknown";
}

double SimExact(std::string_view a, std::string_view b) {
  return a == b ? 1.0 : 0.0;
}

double SimUnigramPrecision(std::string_view candidate,
                           std::string_view reference) {
  std::vector<std::string_view> cand = SplitWhitespace(candidate);
  if (cand.empty()) return 0.0;
  std::vector<std::string_view> ref = SplitWhitespace(reference);
  std::sort(cand.begin(), cand.end());
  std::sort(ref.begin(), ref.end());
  // Merge of two sorted multisets counts min(count_c, count_r) per type.
  std::size_t matches = 0;
  auto c = cand.begin();
  auto r = ref.begin();
  while (c != cand.end() && r != ref.end()) {
    if (*c < *r) {
      ++c;
    } else if (*r < *c) {
      ++r;
    } else {
      ++matches;
      ++c;
      ++r;
    }
  }
  return static_cast<double>(matches) / static_cast<double>(cand.size());
}

namespace {

std::vector<double> MeanVector(std::string_view text,
                               const EmbeddingTable &table) {
  std::vector<double> mean(table.dimension(), 0.0);
  std::vector<std::string_view> tokens = SplitWhitespace(text);
  if (tokens.empty()) return mean;
  for (std::string_view t : tokens) {
    if (const double *v = table.Find(t)) {
      for (int d = 0; d < table.dimension(); ++d) mean[d] += v[d];
    }
  }
  const double n = static_cast<double>(tokens.size());
  for (double &x : mean) x /= n;
  return mean;
}

}  // namespace

double SimVector(std::string_view a, std::string_view b,
                 const EmbeddingTable &table) {
  std::vector<double> va = MeanVector(a, table);
  std::vector<double> vb = MeanVector(b, table);
  double dot = 0.0, na = 0.0, nb = 0.0;
  for (int d = 0; d < table.dimension(); ++d) {
    dot += va[d] * vb[d];
    na += va[d] * va[d];
    nb += vb[d] * vb[d];
  }
  if (na == 0.0 || nb == 0.0) return 0.0;
  // sqrt(na * nb) rather than sqrt(na) * sqrt(nb) keeps sim(a, a) == 1 exact.
  double cosine = dot / std::sqrt(na * nb);
  return std::clamp(cosine, 0.0, 1.0);
}

Similarity::Similarity(SimilarityKind kind,
                       std::shared_ptr<const EmbeddingTable> table)
    : kind_(kind), table_(std::move(table)) {
  if (kind_ == SimilarityKind::kVectorCosine && !table_) {
    throw ConfigError("vector similarity requires an embedding table");
  }
}

double Similarity::operator()(std::string_view summary_arg,
                              std::string_view source_arg) const {
  switch (kind_) {
    case SimilarityKind::kExact:
      return SimExact(summary_arg, source_arg);
    case SimilarityKind::kUnigramPrecision:
      return SimUnigramPrecision(summary_arg, source_arg);
    case SimilarityKind::kVectorCosine:
      return SimVector(summary_arg, source_arg, *table_);
  }
  return 0.0;
}

}  // namespace srlscore
