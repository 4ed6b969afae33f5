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

// Seven-role fact tuples built from semantic role frames.

#ifndef SRLSCORE_FACT_TUPLE_H_
#define SRLSCORE_FACT_TUPLE_H_

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "srlscore/document.h"

namespace srlscore {

// Fixed role order of a fact tuple.
enum class Role : int {
  kAgent = 0,
  kNegation = 1,
  kRelation = 2,
  kPatient = 3,
  kRecipient = 4,
  kTime = 5,
  kLocation = 6,
};

inline constexpr int kNumRoles = 7;

inline constexpr std::array<Role, kNumRoles> kAllRoles = {
    Role::kAgent,     Role::kNegation, Role::kRelation, Role::kPatient,
    Role::kRecipient, Role::kTime,     Role::kLocation};

std::string_view RoleName(Role role);

// Normalized surface text of one role. Empty text means the role is absent.
struct RoleValue {
  std::string text;
  std::optional<MentionSpan> span;

  bool present() const { return !text.empty(); }
  bool operator==(const RoleValue &) const = default;
};

struct FactTuple {
  std::array<RoleValue, kNumRoles> roles;
  int sentence_index = 0;
  int predicate_index = 0;

  RoleValue &operator[](Role r) { return roles[static_cast<int>(r)]; }
  const RoleValue &operator[](Role r) const {
    return roles[static_cast<int>(r)];
  }
  // Role texts only; provenance and spans are ignored.
  bool SameContent(const FactTuple &other) const;
  bool operator==(const FactTuple &) const = default;
};

struct FactDatabase {
  std::string doc_id;
  std::vector<FactTuple> tuples;

  std::size_t size() const { return tuples.size(); }
  bool empty() const { return tuples.empty(); }
};

// PropBank label to role: ARG0 agent, ARG1 patient, ARG2 recipient,
// ARGM-TMP time, ARGM-LOC location, ARGM-NEG negation. Anything else
// (ARG3, ARG4, other modifiers, R-/C- prefixed labels) is dropped.
std::optional<Role> MapLabel(std::string_view propbank_label);

// One tuple per frame, in document order. Relation is the normalized lemma,
// or the surface predicate when no lemma was given. When a frame carries
// several spans for one role the leftmost wins.
FactDatabase ExtractTuples(const AnnotatedDocument &doc);

// Keeps agent, relation and patient; clears the other four roles.
FactTuple ReduceToTriplet(const FactTuple &tuple);
FactDatabase ReduceToTriplets(const FactDatabase &db);

// JSON view: {"sentence", "predicate", "roles": [7 strings or null]}.
nlohmann::json TupleToJson(const FactTuple &tuple);
nlohmann::json DatabaseToJson(const FactDatabase &db);

}  // namespace srlscore

#endif  // SRLSCORE_FACT_TUPLE_H_
