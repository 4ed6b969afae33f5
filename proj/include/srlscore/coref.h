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

// Coreference-driven tuple expansion. Each role that contains a mention of a
// coref cluster is re-written with every surface form of that cluster, and a
// tuple expands into the Cartesian product of its roles' alternatives.

#ifndef SRLSCORE_COREF_H_
#define SRLSCORE_COREF_H_

#include <map>
#include <string>
#include <vector>

#include "srlscore/document.h"
#include "srlscore/fact_tuple.h"

namespace srlscore {

inline constexpr int kDefaultCorefCap = 64;

class EntityDictionary {
 public:
  struct Entity {
    int cluster_id = 0;
    // Normalized, deduplicated, in order of first appearance.
    std::vector<std::string> surface_forms;
  };

  static EntityDictionary Build(const AnnotatedDocument &doc);

  const std::vector<Entity> &entities() const { return entities_; }
  const std::map<MentionSpan, int> &mention_index() const {
    return mention_index_;
  }
  bool empty() const { return entities_.empty(); }

  // Cluster owning exactly this span, or -1.
  int ClusterOf(const MentionSpan &span) const;
  const Entity &entity(int cluster_id) const { return entities_[cluster_id]; }

 private:
  std::vector<Entity> entities_;
  std::map<MentionSpan, int> mention_index_;
};

// Alternatives for a single role: the original text first, then each
// distinct re-write obtained by substituting contained mentions.
std::vector<std::string> RoleAlternatives(const RoleValue &role,
                                          const EntityDictionary &dict,
                                          const AnnotatedDocument &doc);

// Expands every tuple of `db` (which must have been extracted from `doc`).
// The original tuple always comes first in its group and a group never holds
// two tuples with the same role texts. When the full product for a tuple
// exceeds `cap`, only single-role substitutions are emitted for it.
FactDatabase ExpandTuples(const FactDatabase &db, const EntityDictionary &dict,
                          const AnnotatedDocument &doc,
                          int cap = kDefaultCorefCap);

}  // namespace srlscore

#endif  // SRLSCORE_COREF_H_
