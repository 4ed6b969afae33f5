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

#include "srlscore/cli.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "srlscore/coref.h"
#include "srlscore/document.h"
#include "srlscore/errors.h"
#include "srlscore/evaluation.h"
#include "srlscore/fact_tuple.h"
#include "srlscore/logging.h"
#include "srlscore/scorer.h"
#include "srlscore/stats.h"
#include "srlscore/text.h"

namespace srlscore {

namespace {

using json = nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ScoringFlags {
  std::string similarity = "exact";
  std::string embeddings;
  std::vector<double> weights;
  std::string weighting = "dynamic";
  std::string variant = "full";
  std::string coref = "off";
  int coref_cap = kDefaultCorefCap;
};

struct CommonFlags {
  std::string config;
  int jobs = 0;
};

void AddCommonFlags(CLI::App *sub, CommonFlags *f) {
  sub->add_option("--config", f->config,
                  "JSON file of flag values keyed by long flag name; flags "
                  "given on the command line take precedence");
  sub->add_option("--jobs", f->jobs, "Worker threads (0 = one per core)")
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);
}

void AddScoringFlags(CLI::App *sub, ScoringFlags *f) {
  sub->add_option("--similarity", f->similarity,
                  "Argument similarity: exact, rouge (unigram precision of the "
                  "summary argument against the source argument) or vector "
                  "(cosine of mean word vectors)")
      ->capture_default_str()
      ->check(CLI::IsMember({"exact", "rouge", "vector"}));
  sub->add_option("--embeddings", f->embeddings,
                  "Word vector file (token followed by floats per line); "
                  "required with --similarity vector");
  sub->add_option("--weights", f->weights,
                  "Seven comma-separated role weights summing to 1, in the "
                  "order agent,negation,relation,patient,recipient,time,"
                  "location (default 1/7 each; 1/3 on agent,relation,patient "
                  "for the triplet and goodrich variants)")
      ->delimiter(',')
      ->expected(kNumRoles);
  sub->add_option("--weighting", f->weighting,
                  "static, or dynamic to re-normalize weights over the roles "
                  "present in each summary tuple")
      ->capture_default_str()
      ->check(CLI::IsMember({"static", "dynamic"}));
  sub->add_option("--variant", f->variant,
                  "full (seven roles), triplet (agent, relation, patient) or "
                  "goodrich (triplets with agent+relation filtering)")
      ->capture_default_str()
      ->check(CLI::IsMember({"full", "triplet", "goodrich"}));
  sub->add_option("--coref", f->coref,
                  "Expand tuples over coreference surface forms (on/off)")
      ->capture_default_str()
      ->check(CLI::IsMember({"on", "off", "true", "false"}));
  sub->add_option("--coref-cap", f->coref_cap,
                  "Maximum expanded tuples per tuple before falling back to "
                  "single-role substitutions")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
}

bool CorefEnabled(const std::string &flag) {
  return flag == "on" || flag == "true";
}

ScoringConfig BuildConfig(const ScoringFlags &f) {
  ScoringConfig cfg;
  cfg.similarity = ParseSimilarityKind(f.similarity);
  cfg.weighting = ParseWeightingMode(f.weighting);
  cfg.variant = ParseVariant(f.variant);
  cfg.coref = CorefEnabled(f.coref);
  cfg.coref_cap = f.coref_cap;
  if (!f.weights.empty()) {
    if (f.weights.size() != kNumRoles) {
      throw UsageError("--weights expects 7 values, got " +
                       std::to_string(f.weights.size()));
    }
    std::copy(f.weights.begin(), f.weights.end(), cfg.weights.begin());
  } else {
    cfg.weights =
        cfg.variant == Variant::kFull ? EqualWeights() : TripletWeights();
  }
  if (cfg.similarity == SimilarityKind::kVectorCosine) {
    if (f.embeddings.empty()) {
      throw UsageError("--embeddings is required when --similarity vector");
    }
    cfg.embeddings =
        std::make_shared<EmbeddingTable>(EmbeddingTable::Load(f.embeddings));
  }
  return cfg;
}

json ConfigToJson(const ScoringConfig &cfg) {
  return {{"similarity", SimilarityKindName(cfg.similarity)},
          {"weights", cfg.weights},
          {"weighting", WeightingModeName(cfg.weighting)},
          {"variant", VariantName(cfg.variant)},
          {"coref", cfg.coref},
          {"coref_cap", cfg.coref_cap}};
}

std::vector<std::string> ConfigValues(const std::string &key, const json &v) {
  auto scalar = [&](const json &x) -> std::string {
    if (x.is_string()) return x.get<std::string>();
    if (x.is_boolean()) return x.get<bool>() ? "true" : "false";
    if (x.is_number()) return x.dump();
    throw UsageError("config key \"" + key + "\": unsupported value " + x.dump());
  };
  std::vector<std::string> values;
  if (v.is_array()) {
    for (const json &x : v) values.push_back(scalar(x));
  } else {
    values.push_back(scalar(v));
  }
  return values;
}

// Fills options not given on the command line from a JSON config file.
void ApplyConfigFile(CLI::App *sub, const std::string &path) {
  std::ifstream in(path);
  if (!in) throw IoError(path + ": cannot open config file");
  json root;
  try {
    root = json::parse(in);
  } catch (const json::parse_error &e) {
    throw ParseError(path + ": " + e.what(), e.byte);
  }
  if (!root.is_object()) throw UsageError(path + ": config must be a JSON object");
  for (const auto &[key, value] : root.items()) {
    if (key == "config") continue;
    CLI::Option *opt = sub->get_option_no_throw("--" + key);
    if (opt == nullptr) {
      throw UsageError(path + ": unknown config key \"" + key +
                       "\" for command " + sub->get_name());
    }
    if (opt->count() > 0) continue;
    opt->add_result(ConfigValues(key, value));
    opt->run_callback();
  }
}

void Emit(const json &j, const std::string &path, std::ostream &out) {
  std::string text = j.dump(2) + "\n";
  if (path.empty()) {
    out << text;
    out.flush();
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw IoError(path + ": cannot open for writing");
  file << text;
}

std::string ReadFile(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(path + ": cannot open file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// Whitespace-separated numbers, or a JSON array of numbers.
std::vector<double> ReadScores(const std::string &path) {
  std::string text = ReadFile(path);
  std::string_view trimmed = text;
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.front()))) {
    trimmed.remove_prefix(1);
  }
  std::vector<double> values;
  if (!trimmed.empty() && trimmed.front() == '[') {
    json j;
    try {
      j = json::parse(text);
    } catch (const json::parse_error &e) {
      throw ParseError(path + ": " + e.what(), e.byte);
    }
    for (std::size_t i = 0; i < j.size(); ++i) {
      if (!j[i].is_number()) {
        throw ValidationError(path + ": element " + std::to_string(i) +
                              " is not a number");
      }
      values.push_back(j[i].get<double>());
    }
    return values;
  }
  std::size_t index = 0;
  for (std::string_view field : SplitWhitespace(text)) {
    double v;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
    if (ec != std::errc() || ptr != field.data() + field.size()) {
      throw ValidationError(path + ": value " + std::to_string(index) + " (\"" +
                            std::string(field) + "\") is not a number");
    }
    values.push_back(v);
    ++index;
  }
  return values;
}

void Require(const std::string &value, const char *flag) {
  if (value.empty()) throw UsageError(std::string(flag) + " is required");
}

}  // namespace

int RunCli(const std::vector<std::string> &args, std::ostream &out,
           std::ostream &err, bool interactive) {
  CLI::App app("Reference-free factual consistency scoring of summaries "
               "from semantic role fact tuples.",
               "srlscore");
  app.require_subcommand(1);
  std::string log_level;
  app.add_option("--log-level", log_level,
                 "trace, debug, info, warn, error or off (overrides "
                 "SRLSCORE_LOG)");

  CommonFlags common;
  ScoringFlags scoring;

  // score
  CLI::App *score = app.add_subcommand("score", "Score one summary against its source");
  std::string source_path, summary_path, out_path;
  bool dump_tuples = false;
  score->add_option("--source", source_path, "Annotated source document (JSON)");
  score->add_option("--summary", summary_path, "Annotated summary document (JSON)");
  score->add_option("--out", out_path, "Write the report here instead of stdout");
  score->add_flag("--dump-tuples", dump_tuples,
                  "Include both fact databases in the report");
  AddScoringFlags(score, &scoring);
  AddCommonFlags(score, &common);

  // eval
  CLI::App *eval = app.add_subcommand(
      "eval", "Correlate metric scores with human ratings over a dataset");
  std::string dataset_path, annotations_dir, report_path;
  eval->add_option("--dataset", dataset_path,
                   "JSON lines of {sample_id, source, summary, human_score}");
  eval->add_option("--annotations", annotations_dir,
                   "Directory that relative source/summary paths resolve against");
  eval->add_option("--report", report_path, "Write the report here instead of stdout");
  AddScoringFlags(eval, &scoring);
  AddCommonFlags(eval, &common);

  // compare
  CLI::App *compare = app.add_subcommand(
      "compare", "Paired permutation test between two metrics' correlations");
  std::string scores_a, scores_b, human_path, stat_name = "pearson";
  int iterations = kDefaultIterations;
  std::uint64_t seed = kDefaultSeed;
  int comparisons = 1;
  double alpha = 0.05;
  compare->add_option("--scores-a", scores_a, "Per-sample scores of metric A");
  compare->add_option("--scores-b", scores_b, "Per-sample scores of metric B");
  compare->add_option("--human", human_path, "Per-sample human scores");
  compare->add_option("--stat", stat_name, "pearson or spearman")
      ->capture_default_str()
      ->check(CLI::IsMember({"pearson", "spearman"}));
  compare->add_option("--iterations", iterations, "Permutation iterations")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  compare->add_option("--seed", seed, "Random seed")->capture_default_str();
  compare->add_option("--comparisons", comparisons,
                      "Number of comparisons for Bonferroni correction")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  compare->add_option("--alpha", alpha, "Family-wise significance level")
      ->capture_default_str()
      ->check(CLI::Range(0.0, 1.0));
  compare->add_option("--out", out_path, "Write the result here instead of stdout");
  AddCommonFlags(compare, &common);

  // dump-tuples
  CLI::App *dump = app.add_subcommand(
      "dump-tuples", "Print the fact tuples extracted from a document");
  std::string dump_path;
  dump->add_option("file", dump_path, "Annotated document (JSON)");
  dump->add_option("--coref", scoring.coref, "Apply coreference expansion (on/off)")
      ->capture_default_str()
      ->check(CLI::IsMember({"on", "off", "true", "false"}));
  dump->add_option("--coref-cap", scoring.coref_cap, "Coreference expansion cap")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  dump->add_option("--variant", scoring.variant,
                   "full, or triplet/goodrich to reduce to triplets")
      ->capture_default_str()
      ->check(CLI::IsMember({"full", "triplet", "goodrich"}));
  dump->add_option("--out", out_path, "Write here instead of stdout");
  dump->add_option("--config", common.config, "JSON file of flag values");

  // validate
  CLI::App *validate = app.add_subcommand(
      "validate", "Check annotated documents against the interchange schema");
  std::vector<std::string> validate_paths;
  validate->add_option("files", validate_paths, "Annotated documents (JSON)")
      ->expected(1, -1);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (!log_level.empty()) SetLogLevel(log_level);
    CLI::App *active = app.get_subcommands().front();
    if (!common.config.empty()) ApplyConfigFile(active, common.config);

    if (active == score) {
      Require(source_path, "--source");
      Require(summary_path, "--summary");
      Scorer scorer(BuildConfig(scoring));
      AnnotatedDocument source = LoadDocument(source_path);
      AnnotatedDocument summary = LoadDocument(summary_path);
      FactDatabase source_db = scorer.PrepareDatabase(source);
      FactDatabase summary_db = scorer.PrepareDatabase(summary);
      ScoreReport report =
          scorer.config().variant == Variant::kGoodrich
              ? scorer.ScoreGoodrich(source_db, summary_db, common.jobs)
              : scorer.ScoreSummary(source_db, summary_db, common.jobs);
      json j = report.ToJson();
      j["config"] = ConfigToJson(scorer.config());
      if (dump_tuples) {
        j["source_database"] = DatabaseToJson(source_db);
        j["summary_database"] = DatabaseToJson(summary_db);
      }
      Emit(j, out_path, out);
      if (interactive) {
        err << "score " << report.overall << " over " << report.matches.size()
            << " summary tuples (" << report.source_tuples
            << " source tuples)\n";
      }
    } else if (active == eval) {
      Require(dataset_path, "--dataset");
      Scorer scorer(BuildConfig(scoring));
      std::vector<RatedSample> samples = LoadRatedSamples(dataset_path);
      EvalReport report =
          EvaluateDataset(samples, scorer, annotations_dir, common.jobs);
      json j = report.ToJson();
      j["config"] = ConfigToJson(scorer.config());
      Emit(j, report_path, out);
      if (interactive) {
        err << "pearson " << report.pearson << ", spearman " << report.spearman
            << " over " << report.n << " samples (" << report.excluded.size()
            << " excluded)\n";
      }
    } else if (active == compare) {
      Require(scores_a, "--scores-a");
      Require(scores_b, "--scores-b");
      Require(human_path, "--human");
      std::vector<double> a = ReadScores(scores_a);
      std::vector<double> b = ReadScores(scores_b);
      std::vector<double> h = ReadScores(human_path);
      CorrelationStat stat = ParseCorrelationStat(stat_name);
      SignificanceResult result =
          PermutationTest(a, b, h, stat, iterations, seed, common.jobs);
      const double adjusted = alpha / comparisons;
      json j = result.ToJson();
      j["stat"] = CorrelationStatName(stat);
      j["n"] = a.size();
      j["correlation_a"] = Correlation(stat, a, h);
      j["correlation_b"] = Correlation(stat, b, h);
      j["alpha"] = alpha;
      j["comparisons"] = comparisons;
      j["bonferroni_alpha"] = adjusted;
      j["significant"] = result.p_value < adjusted;
      Emit(j, out_path, out);
      if (interactive) {
        err << "delta " << result.observed_delta << ", p = " << result.p_value
            << (result.p_value < adjusted ? " (significant" : " (not significant")
            << " at " << adjusted << ")\n";
      }
    } else if (active == dump) {
      Require(dump_path, "file");
      ScoringConfig cfg;
      cfg.coref = CorefEnabled(scoring.coref);
      cfg.coref_cap = scoring.coref_cap;
      cfg.variant = ParseVariant(scoring.variant);
      cfg.weights = cfg.variant == Variant::kFull ? EqualWeights() : TripletWeights();
      Scorer scorer(cfg);
      AnnotatedDocument doc = LoadDocument(dump_path);
      Emit(DatabaseToJson(scorer.PrepareDatabase(doc)), out_path, out);
    } else if (active == validate) {
      json results = json::array();
      for (const std::string &path : validate_paths) {
        AnnotatedDocument doc = LoadDocument(path);
        results.push_back({{"file", path},
                           {"valid", true},
                           {"doc_id", doc.doc_id},
                           {"sentences", doc.sentences.size()},
                           {"frames", doc.FrameCount()},
                           {"coref_clusters", doc.coref_clusters.size()}});
      }
      Emit(results, "", out);
    }
  } catch (const UsageError &e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ConfigError &e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CLI::ParseError &e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError &e) {
    err << "error: " << e.what() << " (byte " << e.byte_offset() << ")\n";
    return kExitInput;
  } catch (const ValidationError &e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const IoError &e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::invalid_argument &e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception &e) {
    err << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
  return kExitOk;
}

}  // namespace srlscore
