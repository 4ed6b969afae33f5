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

#include "srlscore/coref.h"

#include <algorithm>
#include <climits>
#include <set>
#include <span>

#include "srlscore/text.h"

namespace srlscore {

EntityDictionary EntityDictionary::Build(const AnnotatedDocument &doc) {
  EntityDictionary dict;
  for (const CorefCluster &cluster : doc.coref_clusters) {
    Entity entity;
    entity.cluster_id = static_cast<int>(dict.entities_.size());
    for (const MentionSpan &m : cluster.mentions) {
      std::string form = NormalizeText(MentionSurface(doc, m));
      if (std::find(entity.surface_forms.begin(), entity.surface_forms.end(),
                    form) == entity.surface_forms.end()) {
        entity.surface_forms.push_back(std::move(form));
      }
      dict.mention_index_.emplace(m, entity.cluster_id);
    }
    dict.entities_.push_back(std::move(entity));
  }
  return dict;
}

int EntityDictionary::ClusterOf(const MentionSpan &span) const {
  auto it = mention_index_.find(span);
  return it == mention_index_.end() ? -1 : it->second;
}

namespace {

// Largest-first, non-overlapping mentions fully inside `span`.
std::vector<std::pair<MentionSpan, int>> ContainedMentions(
    const MentionSpan &span, const EntityDictionary &dict) {
  std::vector<std::pair<MentionSpan, int>> found;
  const auto &index = dict.mention_index();
  for (auto it = index.lower_bound({span.sentence, span.start, INT_MIN});
       it != index.end() && it->first.sentence == span.sentence &&
       it->first.start < span.end;
       ++it) {
    if (span.Contains(it->first)) found.push_back(*it);
  }
  std::sort(found.begin(), found.end(), [](const auto &a, const auto &b) {
    if (a.first.start != b.first.start) return a.first.start < b.first.start;
    return a.first.length() > b.first.length();
  });
  std::vector<std::pair<MentionSpan, int>> chosen;
  int covered_until = INT_MIN;
  for (const auto &m : found) {
    if (m.first.start < covered_until) continue;
    chosen.push_back(m);
    covered_until = m.first.end;
  }
  return chosen;
}

}  // namespace

std::vector<std::string> RoleAlternatives(const RoleValue &role,
                                          const EntityDictionary &dict,
                                          const AnnotatedDocument &doc) {
  std::vector<std::string> alternatives{role.text};
  if (!role.present() || !role.span || dict.empty()) return alternatives;
  const MentionSpan &span = *role.span;
  auto mentions = ContainedMentions(span, dict);
  if (mentions.empty()) return alternatives;

  // Fixed text between mentions, and one slot of forms per mention.
  std::span<const std::string> tokens(doc.sentences[span.sentence].tokens);
  std::vector<std::string> gaps;
  std::vector<const std::vector<std::string> *> slots;
  int cursor = span.start;
  for (const auto &[mention, cluster] : mentions) {
    gaps.push_back(NormalizeTokens(tokens.subspan(cursor, mention.start - cursor)));
    slots.push_back(&dict.entity(cluster).surface_forms);
    cursor = mention.end;
  }
  gaps.push_back(NormalizeTokens(tokens.subspan(cursor, span.end - cursor)));

  std::set<std::string> seen{role.text};
  std::vector<std::size_t> choice(slots.size(), 0);
  while (true) {
    std::string text = gaps[0];
    for (std::size_t k = 0; k < slots.size(); ++k) {
      text += ' ';
      text += (*slots[k])[choice[k]];
      text += ' ';
      text += gaps[k + 1];
    }
    text = NormalizeText(text);
    if (!text.empty() && seen.insert(text).second) {
      alternatives.push_back(std::move(text));
    }
    std::size_t k = 0;
    while (k < slots.size() && ++choice[k] == slots[k]->size()) {
      choice[k++] = 0;
    }
    if (k == slots.size()) break;
  }
  return alternatives;
}

FactDatabase ExpandTuples(const FactDatabase &db, const EntityDictionary &dict,
                          const AnnotatedDocument &doc, int cap) {
  if (dict.empty()) return db;
  FactDatabase out;
  out.doc_id = db.doc_id;
  out.tuples.reserve(db.size());

  for (const FactTuple &tuple : db.tuples) {
    std::array<std::vector<std::string>, kNumRoles> alts;
    std::size_t product = 1;
    for (int r = 0; r < kNumRoles; ++r) {
      alts[r] = RoleAlternatives(tuple.roles[r], dict, doc);
      product = product > static_cast<std::size_t>(cap)
                    ? product
                    : product * alts[r].size();
    }

    std::set<std::array<std::string, kNumRoles>> seen;
    auto emit = [&](const FactTuple &t) {
      std::array<std::string, kNumRoles> key;
      for (int r = 0; r < kNumRoles; ++r) key[r] = t.roles[r].text;
      if (seen.insert(std::move(key)).second) out.tuples.push_back(t);
    };

    emit(tuple);
    if (product <= static_cast<std::size_t>(cap)) {
      std::array<std::size_t, kNumRoles> choice{};
      while (true) {
        std::size_t r = 0;
        while (r < kNumRoles && ++choice[r] == alts[r].size()) choice[r++] = 0;
        if (r == kNumRoles) break;
        FactTuple t = tuple;
        for (int k = 0; k < kNumRoles; ++k) t.roles[k].text = alts[k][choice[k]];
        emit(t);
      }
    } else {
      for (int r = 0; r < kNumRoles; ++r) {
        for (std::size_t k = 1; k < alts[r].size(); ++k) {
          FactTuple t = tuple;
          t.roles[r].text = alts[r][k];
          emit(t);
        }
      }
    }
  }
  return out;
}

}  // namespace srlscore
