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

#include "srlscore/fact_tuple.h"

#include <span>

#include <nlohmann/json.hpp>

#include "srlscore/text.h"

namespace srlscore {

std::string_view RoleName(Role role) {
  switch (role) {
    case Role::kAgent: return "agent";
    case Role::kNegation: return "negation";
    case Role::kRelation: return "relation";
    case Role::kPatient: return "patient";
    case Role::kRecipient: return "recipient";
    case Role::kTime: return "time";
    case Role::kLocation: return "location";
  }
  return "unknown";
}

bool FactTuple::SameContent(const FactTuple &other) const {
  for (int i = 0; i < kNumRoles; ++i) {
    if (roles[i].text != other.roles[i].text) return false;
  }
  return true;
}

std::optional<Role> MapLabel(std::string_view label) {
  if (label == "ARG0") return Role::kAgent;
  if (label == "ARG1") return Role::kPatient;
  if (label == "ARG2") return Role::kRecipient;
  if (label == "ARGM-TMP") return Role::kTime;
  if (label == "ARGM-LOC") return Role::kLocation;
  if (label == "ARGM-NEG") return Role::kNegation;
  return std::nullopt;
}

FactDatabase ExtractTuples(const AnnotatedDocument &doc) {
  FactDatabase db;
  db.doc_id = doc.doc_id;
  db.tuples.reserve(doc.FrameCount());
  for (int s = 0; s < static_cast<int>(doc.sentences.size()); ++s) {
    const Sentence &sentence = doc.sentences[s];
    std::span<const std::string> tokens(sentence.tokens);
    for (const SrlFrame &frame : sentence.frames) {
      FactTuple tuple;
      tuple.sentence_index = s;
      tuple.predicate_index = frame.predicate_index;

      RoleValue &relation = tuple[Role::kRelation];
      relation.text = NormalizeText(frame.predicate_lemma);
      if (relation.text.empty()) {
        relation.text = NormalizeText(tokens[frame.predicate_index]);
      }
      // A predicate token that normalizes to nothing still yields a relation.
      if (relation.text.empty()) relation.text = "_";

      std::array<int, kNumRoles> best_start;
      best_start.fill(-1);
      for (const SrlArgument &arg : frame.arguments) {
        std::optional<Role> role = MapLabel(arg.label);
        if (!role || *role == Role::kRelation) continue;
        int r = static_cast<int>(*role);
        if (best_start[r] != -1 && best_start[r] <= arg.start) continue;
        std::string text =
            NormalizeTokens(tokens.subspan(arg.start, arg.end - arg.start));
        if (text.empty()) continue;
        best_start[r] = arg.start;
        tuple.roles[r] = RoleValue{std::move(text),
                                   MentionSpan{s, arg.start, arg.end}};
      }
      db.tuples.push_back(std::move(tuple));
    }
  }
  return db;
}

FactTuple ReduceToTriplet(const FactTuple &tuple) {
  FactTuple out = tuple;
  for (Role r : {Role::kNegation, Role::kRecipient, Role::kTime,
                 Role::kLocation}) {
    out[r] = RoleValue{};
  }
  return out;
}

FactDatabase ReduceToTriplets(const FactDatabase &db) {
  FactDatabase out;
  out.doc_id = db.doc_id;
  out.tuples.reserve(db.size());
  for (const FactTuple &t : db.tuples) out.tuples.push_back(ReduceToTriplet(t));
  return out;
}

nlohmann::json TupleToJson(const FactTuple &tuple) {
  nlohmann::json roles = nlohmann::json::array();
  for (const RoleValue &v : tuple.roles) {
    roles.push_back(v.present() ? nlohmann::json(v.text) : nlohmann::json());
  }
  return {{"sentence", tuple.sentence_index},
          {"predicate", tuple.predicate_index},
          {"roles", std::move(roles)}};
}

nlohmann::json DatabaseToJson(const FactDatabase &db) {
  nlohmann::json tuples = nlohmann::json::array();
  for (const FactTuple &t : db.tuples) tuples.push_back(TupleToJson(t));
  return {{"doc_id", db.doc_id},
          {"role_order", {"agent", "negation", "relation", "patient",
                          "recipient", "time", "location"}},
          {"tuples", std::move(tuples)}};
}

}  // namespace srlscore
