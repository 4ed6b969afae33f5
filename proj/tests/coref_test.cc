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

#include <random>
#include <set>
#include <string>

#include <gtest/gtest.h>

#include "srlscore/document.h"
#include "srlscore/fact_tuple.h"
#include "test_util.h"

namespace srlscore {
namespace {

using testing::DataPath;

std::vector<std::string> Column(const FactDatabase &db, Role role) {
  std::vector<std::string> out;
  for (const FactTuple &t : db.tuples) out.push_back(t[role].text);
  return out;
}

TEST(CorefTest, DictionaryDeduplicatesForms) {
  AnnotatedDocument doc = LoadDocument(DataPath("coref_writer.json"));
  EntityDictionary dict = EntityDictionary::Build(doc);
  ASSERT_EQ(dict.entities().size(), 2u);
  EXPECT_EQ(dict.entity(0).surface_forms,
            (std::vector<std::string>{"sara stewart", "the writer"}));
  EXPECT_EQ(dict.entity(1).surface_forms,
            (std::vector<std::string>{"the editor", "her publisher"}));
  EXPECT_EQ(dict.ClusterOf({2, 2, 4}), 0);
  EXPECT_EQ(dict.ClusterOf({1, 3, 5}), 1);
  EXPECT_EQ(dict.ClusterOf({2, 0, 1}), -1);
}

TEST(CorefTest, TwoClustersOverTwoRolesGiveFourTuples) {
  AnnotatedDocument doc = LoadDocument(DataPath("coref_writer.json"));
  EntityDictionary dict = EntityDictionary::Build(doc);
  FactDatabase db = ExtractTuples(doc);
  FactDatabase first{db.doc_id, {db.tuples[0]}};
  FactDatabase expanded = ExpandTuples(first, dict, doc);
  ASSERT_EQ(expanded.size(), 4u);
  EXPECT_EQ(expanded.tuples[0], db.tuples[0]);
  std::set<std::pair<std::string, std::string>> pairs;
  for (const FactTuple &t : expanded.tuples) {
    pairs.emplace(t[Role::kAgent].text, t[Role::kPatient].text);
    EXPECT_EQ(t[Role::kRelation].text, "meet");
    EXPECT_EQ(t[Role::kLocation].text, "in london");
  }
  EXPECT_EQ(pairs, (std::set<std::pair<std::string, std::string>>{
                       {"sara stewart", "the editor"},
                       {"sara stewart", "her publisher"},
                       {"the writer", "the editor"},
                       {"the writer", "her publisher"}}));
}

TEST(CorefTest, MentionInsideLargerArgumentIsSubstituted) {
  AnnotatedDocument doc = LoadDocument(DataPath("coref_writer.json"));
  EntityDictionary dict = EntityDictionary::Build(doc);
  FactDatabase db = ExtractTuples(doc);
  FactDatabase praise{db.doc_id, {db.tuples[2]}};
  FactDatabase expanded = ExpandTuples(praise, dict, doc);
  EXPECT_EQ(Column(expanded, Role::kPatient),
            (std::vector<std::string>{"the writer 's book",
                                      "sara stewart 's book"}));
  EXPECT_EQ(ExpandTuples(db, dict, doc).size(), 10u);
}

TEST(CorefTest, ThreeFormClusterGivesThreeTuples) {
  AnnotatedDocument doc = ParseDocument(R"({"doc_id":"x","sentences":[
    {"tokens":["Angela","Merkel","spoke","."],
     "frames":[{"predicate_index":2,"predicate_lemma":"speak",
       "arguments":[{"label":"ARG0","start":0,"end":2}]}]},
    {"tokens":["The","chancellor","said","she","agreed","."]}],
    "coref_clusters":[[[0,0,2],[1,0,2],[1,3,4]]]})");
  FactDatabase expanded =
      ExpandTuples(ExtractTuples(doc), EntityDictionary::Build(doc), doc);
  EXPECT_EQ(Column(expanded, Role::kAgent),
            (std::vector<std::string>{"angela merkel", "the chancellor",
                                      "she"}));
}

TEST(CorefTest, RepeatedFormsDoNotDuplicateTuples) {
  AnnotatedDocument doc = ParseDocument(R"({"doc_id":"x","sentences":[
    {"tokens":["Mary","ran","."],
     "frames":[{"predicate_index":1,
       "arguments":[{"label":"ARG0","start":0,"end":1}]}]},
    {"tokens":["MARY","slept","."]}],
    "coref_clusters":[[[0,0,1],[1,0,1]]]})");
  FactDatabase expanded =
      ExpandTuples(ExtractTuples(doc), EntityDictionary::Build(doc), doc);
  EXPECT_EQ(expanded.size(), 1u);
}

TEST(CorefTest, CapFallsBackToSingleRoleSubstitution) {
  AnnotatedDocument doc = LoadDocument(DataPath("coref_writer.json"));
  EntityDictionary dict = EntityDictionary::Build(doc);
  FactDatabase db = ExtractTuples(doc);
  FactDatabase first{db.doc_id, {db.tuples[0]}};
  FactDatabase capped = ExpandTuples(first, dict, doc, 3);
  ASSERT_EQ(capped.size(), 3u);
  EXPECT_EQ(capped.tuples[0], db.tuples[0]);
  for (const FactTuple &t : capped.tuples) {
    int changed = (t[Role::kAgent].text != "sara stewart") +
                  (t[Role::kPatient].text != "the editor");
    EXPECT_LE(changed, 1);
  }
  EXPECT_EQ(ExpandTuples(db, dict, doc, 3).size(), 8u);
}

TEST(CorefPropertyTest, EmptyDictionaryIsIdentity) {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    AnnotatedDocument doc = testing::RandomDocument(rng, false);
    FactDatabase db = ExtractTuples(doc);
    EntityDictionary dict = EntityDictionary::Build(doc);
    ASSERT_TRUE(dict.empty());
    FactDatabase out = ExpandTuples(db, dict, doc);
    ASSERT_EQ(out.doc_id, db.doc_id);
    ASSERT_EQ(out.tuples, db.tuples);
  }
}

TEST(CorefPropertyTest, ExpansionKeepsOriginalsInOrder) {
  std::mt19937 rng(18);
  for (int trial = 0; trial < 200; ++trial) {
    AnnotatedDocument doc = testing::RandomDocument(rng, true);
    FactDatabase db = ExtractTuples(doc);
    FactDatabase out = ExpandTuples(db, EntityDictionary::Build(doc), doc);
    ASSERT_GE(out.size(), db.size());
    std::size_t next = 0;
    for (const FactTuple &t : out.tuples) {
      if (next < db.size() && t == db.tuples[next]) ++next;
    }
    ASSERT_EQ(next, db.size()) << "trial " << trial;
  }
}

}  // namespace
}  // namespace srlscore
