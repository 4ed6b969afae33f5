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

#include "srlscore/document.h"

#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "srlscore/errors.h"
#include "srlscore/logging.h"

namespace srlscore {

using json = nlohmann::json;

namespace {

[[noreturn]] void Invalid(const std::string &where, const std::string &what) {
  throw ValidationError(where + ": " + what);
}

const json &Field(const json &obj, const char *key, const std::string &where) {
  auto it = obj.find(key);
  if (it == obj.end()) Invalid(where, std::string("missing field \"") + key + "\"");
  return *it;
}

int AsInt(const json &v, const std::string &where) {
  if (!v.is_number_integer()) Invalid(where, "expected integer");
  return v.get<int>();
}

std::string AsString(const json &v, const std::string &where) {
  if (!v.is_string()) Invalid(where, "expected string");
  return v.get<std::string>();
}

const json &AsArray(const json &v, const std::string &where) {
  if (!v.is_array()) Invalid(where, "expected array");
  return v;
}

SrlFrame ReadFrame(const json &j, const std::string &where) {
  if (!j.is_object()) Invalid(where, "expected object");
  SrlFrame frame;
  frame.predicate_index =
      AsInt(Field(j, "predicate_index", where), where + ".predicate_index");
  if (auto it = j.find("predicate_lemma"); it != j.end() && !it->is_null()) {
    frame.predicate_lemma = AsString(*it, where + ".predicate_lemma");
  }
  if (auto it = j.find("arguments"); it != j.end()) {
    const json &args = AsArray(*it, where + ".arguments");
    for (std::size_t a = 0; a < args.size(); ++a) {
      std::string at = where + " argument " + std::to_string(a);
      if (!args[a].is_object()) Invalid(at, "expected object");
      SrlArgument arg;
      arg.label = AsString(Field(args[a], "label", at), at + ".label");
      arg.start = AsInt(Field(args[a], "start", at), at + ".start");
      arg.end = AsInt(Field(args[a], "end", at), at + ".end");
      frame.arguments.push_back(std::move(arg));
    }
  }
  return frame;
}

AnnotatedDocument FromJson(const json &root) {
  if (!root.is_object()) Invalid("document", "top level must be an object");
  AnnotatedDocument doc;
  if (auto it = root.find("doc_id"); it != root.end() && !it->is_null()) {
    doc.doc_id = AsString(*it, "doc_id");
  }
  const json &sentences = AsArray(Field(root, "sentences", "document"), "sentences");
  for (std::size_t s = 0; s < sentences.size(); ++s) {
    std::string where = "sentence " + std::to_string(s);
    const json &js = sentences[s];
    if (!js.is_object()) Invalid(where, "expected object");
    Sentence sentence;
    const json &tokens = AsArray(Field(js, "tokens", where), where + ".tokens");
    for (const json &t : tokens) {
      sentence.tokens.push_back(AsString(t, where + ".tokens"));
    }
    if (auto it = js.find("frames"); it != js.end()) {
      const json &frames = AsArray(*it, where + ".frames");
      for (std::size_t f = 0; f < frames.size(); ++f) {
        sentence.frames.push_back(
            ReadFrame(frames[f], where + " frame " + std::to_string(f)));
      }
    }
    doc.sentences.push_back(std::move(sentence));
  }

  if (auto it = root.find("coref_clusters"); it != root.end() && !it->is_null()) {
    const json &clusters = AsArray(*it, "coref_clusters");
    for (std::size_t c = 0; c < clusters.size(); ++c) {
      std::string where = "cluster " + std::to_string(c);
      const json &jc = AsArray(clusters[c], where);
      CorefCluster cluster;
      for (std::size_t m = 0; m < jc.size(); ++m) {
        std::string mw = where + " mention " + std::to_string(m);
        const json &jm = AsArray(jc[m], mw);
        if (jm.size() != 3) Invalid(mw, "expected [sentence, start, end]");
        cluster.mentions.push_back(
            {AsInt(jm[0], mw), AsInt(jm[1], mw), AsInt(jm[2], mw)});
      }
      if (cluster.mentions.size() < 2) {
        Log()->debug("dropping singleton coref cluster {}", c);
        continue;
      }
      doc.coref_clusters.push_back(std::move(cluster));
    }
  }
  return doc;
}

}  // namespace

int AnnotatedDocument::FrameCount() const {
  int count = 0;
  for (const Sentence &s : sentences) count += static_cast<int>(s.frames.size());
  return count;
}

void ValidateDocument(const AnnotatedDocument &doc) {
  if (doc.sentences.empty()) Invalid("document", "no sentences");
  for (std::size_t s = 0; s < doc.sentences.size(); ++s) {
    const Sentence &sentence = doc.sentences[s];
    const int n = static_cast<int>(sentence.tokens.size());
    std::string where = "sentence " + std::to_string(s);
    if (n == 0) Invalid(where, "empty token list");
    for (std::size_t f = 0; f < sentence.frames.size(); ++f) {
      const SrlFrame &frame = sentence.frames[f];
      std::string fw = where + " frame " + std::to_string(f);
      if (frame.predicate_index < 0 || frame.predicate_index >= n) {
        Invalid(fw, "predicate_index " + std::to_string(frame.predicate_index) +
                        " out of range [0, " + std::to_string(n) + ")");
      }
      for (std::size_t a = 0; a < frame.arguments.size(); ++a) {
        const SrlArgument &arg = frame.arguments[a];
        std::string aw = fw + " argument " + std::to_string(a);
        if (arg.label == "V") {
          Invalid(aw, "predicate label V must not appear among arguments");
        }
        if (arg.start < 0 || arg.end > n || arg.start >= arg.end) {
          Invalid(aw, "span [" + std::to_string(arg.start) + ", " +
                          std::to_string(arg.end) + ") out of range for " +
                          std::to_string(n) + " tokens");
        }
      }
    }
  }

  std::map<MentionSpan, std::size_t> owner;
  for (std::size_t c = 0; c < doc.coref_clusters.size(); ++c) {
    const CorefCluster &cluster = doc.coref_clusters[c];
    std::string where = "cluster " + std::to_string(c);
    if (cluster.mentions.size() < 2) Invalid(where, "fewer than two mentions");
    for (std::size_t m = 0; m < cluster.mentions.size(); ++m) {
      const MentionSpan &span = cluster.mentions[m];
      std::string mw = where + " mention " + std::to_string(m);
      if (span.sentence < 0 ||
          span.sentence >= static_cast<int>(doc.sentences.size())) {
        Invalid(mw, "sentence index " + std::to_string(span.sentence) +
                        " out of range");
      }
      const int n = static_cast<int>(doc.sentences[span.sentence].tokens.size());
      if (span.start < 0 || span.end > n || span.start >= span.end) {
        Invalid(mw, "span [" + std::to_string(span.start) + ", " +
                        std::to_string(span.end) + ") out of range for sentence " +
                        std::to_string(span.sentence));
      }
      auto [it, inserted] = owner.emplace(span, c);
      if (!inserted) {
        Invalid(mw, it->second == c
                        ? std::string("duplicate mention span")
                        : "span already belongs to cluster " +
                              std::to_string(it->second));
      }
    }
  }
}

AnnotatedDocument ParseDocument(std::string_view text) {
  json root;
  try {
    root = json::parse(text.begin(), text.end());
  } catch (const json::parse_error &e) {
    throw ParseError(e.what(), e.byte);
  }
  AnnotatedDocument doc = FromJson(root);
  ValidateDocument(doc);
  return doc;
}

AnnotatedDocument LoadDocument(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(path + ": cannot open file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return ParseDocument(buffer.str());
  } catch (const ParseError &e) {
    throw ParseError(path + ": " + e.what(), e.byte_offset());
  } catch (const ValidationError &e) {
    throw ValidationError(path + ": " + e.what());
  }
}

std::string SerializeDocument(const AnnotatedDocument &doc) {
  json root = json::object();
  root["doc_id"] = doc.doc_id;
  json sentences = json::array();
  for (const Sentence &s : doc.sentences) {
    json frames = json::array();
    for (const SrlFrame &f : s.frames) {
      json args = json::array();
      for (const SrlArgument &a : f.arguments) {
        args.push_back({{"label", a.label}, {"start", a.start}, {"end", a.end}});
      }
      frames.push_back({{"predicate_index", f.predicate_index},
                        {"predicate_lemma", f.predicate_lemma},
                        {"arguments", std::move(args)}});
    }
    sentences.push_back({{"tokens", s.tokens}, {"frames", std::move(frames)}});
  }
  root["sentences"] = std::move(sentences);
  json clusters = json::array();
  for (const CorefCluster &c : doc.coref_clusters) {
    json mentions = json::array();
    for (const MentionSpan &m : c.mentions) {
      mentions.push_back({m.sentence, m.start, m.end});
    }
    clusters.push_back(std::move(mentions));
  }
  root["coref_clusters"] = std::move(clusters);
  return root.dump();
}

std::string MentionSurface(const AnnotatedDocument &doc,
                           const MentionSpan &mention) {
  if (mention.sentence < 0 ||
      mention.sentence >= static_cast<int>(doc.sentences.size())) {
    throw std::out_of_range("mention sentence index out of range");
  }
  const std::vector<std::string> &tokens = doc.sentences[mention.sentence].tokens;
  if (mention.start < 0 || mention.end > static_cast<int>(tokens.size()) ||
      mention.start >= mention.end) {
    throw std::out_of_range("mention span out of range");
  }
  std::string out = tokens[mention.start];
  for (int i = mention.start + 1; i < mention.end; ++i) {
    out += ' ';
    out += tokens[i];
  }
  return out;
}

}  // namespace srlscore
