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

// Annotated document model and the JSON interchange format produced by the
// annotator bridge. See docs/interchange-format.md for the exact schema.

#ifndef SRLSCORE_DOCUMENT_H_
#define SRLSCORE_DOCUMENT_H_

#include <string>
#include <string_view>
#include <vector>

namespace srlscore {

// A contiguous token range [start, end) inside one sentence.
struct MentionSpan {
  int sentence = 0;
  int start = 0;
  int end = 0;

  int length() const { return end - start; }
  bool Contains(const MentionSpan &other) const {
    return sentence == other.sentence && start <= other.start &&
           other.end <= end;
  }
  auto operator<=>(const MentionSpan &) const = default;
};

// One labeled argument of a predicate. Offsets are sentence-local.
struct SrlArgument {
  std::string label;  // PropBank label, e.g. "ARG0", "ARGM-TMP"
  int start = 0;
  int end = 0;

  bool operator==(const SrlArgument &) const = default;
};

// Predicate-argument structure for a single predicate.
struct SrlFrame {
  int predicate_index = 0;
  std::string predicate_lemma;  // may be empty; falls back to surface token
  std::vector<SrlArgument> arguments;

  bool operator==(const SrlFrame &) const = default;
};

struct Sentence {
  std::vector<std::string> tokens;
  std::vector<SrlFrame> frames;

  bool operator==(const Sentence &) const = default;
};

// Mentions referring to one entity. Always at least two distinct spans.
struct CorefCluster {
  std::vector<MentionSpan> mentions;

  bool operator==(const CorefCluster &) const = default;
};

// Immutable after parsing; safe to share across threads.
struct AnnotatedDocument {
  std::string doc_id;
  std::vector<Sentence> sentences;
  std::vector<CorefCluster> coref_clusters;

  int FrameCount() const;
  bool operator==(const AnnotatedDocument &) const = default;
};

// Parses and validates interchange JSON. Throws ParseError (with byte offset)
// on malformed text and ValidationError on schema or bounds violations.
// Singleton coref clusters are dropped.
AnnotatedDocument ParseDocument(std::string_view text);

// Reads a file and parses it. Error messages are prefixed with the path.
AnnotatedDocument LoadDocument(const std::string &path);

// Compact canonical JSON. ParseDocument(SerializeDocument(d)) == d.
std::string SerializeDocument(const AnnotatedDocument &doc);

// Checks every invariant of the data model; throws ValidationError naming
// the offending sentence, frame or cluster.
void ValidateDocument(const AnnotatedDocument &doc);

// Space-joined tokens of a mention. Throws std::out_of_range if the span is
// outside the document.
std::string MentionSurface(const AnnotatedDocument &doc,
                           const MentionSpan &mention);

}  // namespace srlscore

#endif  // SRLSCORE_DOCUMENT_H_
