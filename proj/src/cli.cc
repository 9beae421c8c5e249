// Copyright 2026 The Contra Authors.
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

#include "contra/cli.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "CLI11.hpp"
#include "contra/baseline.h"
#include "contra/corpus.h"
#include "contra/error.h"
#include "contra/evaluation.h"
#include "contra/lexicons.h"
#include "contra/matchers.h"
#include "contra/mining.h"
#include "contra/synthetic.h"
#include "contra/tuples.h"

namespace contra {
namespace {

namespace fs = std::filesystem;

struct RunConfig {
  std::string corpus;
  std::string lexicons;
  std::string rulebase;
  std::string model;
  std::string mapping;
  std::string mode;  // empty selects the subcommand default
  MiningParams mining;
  SaParams sa;
  std::uint64_t seed = 0;
  bool strict = false;
  std::string out;

  // synth / split
  int per_category = 200;
  int noise = 400;
  double dev_fraction = 0.7;
  std::string test_out;
};

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot write " + path);
  f << text;
  if (!f) throw IoError("write failed: " + path);
}

LoadOptions load_options(const RunConfig& cfg, std::ostream& err) {
  LoadOptions opts;
  opts.strict = cfg.strict;
  opts.warn = [&err](const std::string& msg) { err << "warning: " << msg << "\n"; };
  return opts;
}

fs::path lexicon_dir(const RunConfig& cfg) {
  if (!cfg.lexicons.empty()) return cfg.lexicons;
  if (const char* env = std::getenv(kLexiconDirEnv); env != nullptr && *env != '\0') return env;
  throw ConfigError(std::string("no lexicon directory: pass --lexicons or set ") + kLexiconDirEnv);
}

// Defaults to category_mapping.json beside the lexicon directory.
fs::path mapping_path(const RunConfig& cfg, const fs::path& lexicons) {
  if (!cfg.mapping.empty()) return cfg.mapping;
  return lexicons.parent_path() / "category_mapping.json";
}

BaselineModel model_or_initial(const RunConfig& cfg, std::ostream& err) {
  if (!cfg.model.empty()) return load_model(cfg.model);
  err << "warning: no --model given; using the untuned initial model\n";
  return BaselineModel::initial();
}

DetectMode detect_mode(const RunConfig& cfg, std::string_view fallback) {
  const std::string name = cfg.mode.empty() ? std::string(fallback) : cfg.mode;
  std::optional<DetectMode> m = parse_detect_mode(name);
  if (!m) throw ConfigError("unknown --mode '" + name + "' (gold|classify|vote)");
  return *m;
}

// Parameter bounds are usage errors, not data errors.
template <typename Params>
void check_params(const Params& params) {
  try {
    params.validate();
  } catch (const OutOfRange& e) {
    throw ConfigError(e.what());
  }
}

int cmd_validate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  std::vector<Diagnostic> diags = validate_corpus_file(cfg.corpus, load_options(cfg, err));
  for (const Diagnostic& d : diags) err << cfg.corpus << ":" << d.line << ": " << d.message << "\n";
  if (!diags.empty()) return kExitDataError;
  out << cfg.corpus << ": ok\n";
  return kExitOk;
}

int cmd_synth(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  if (cfg.per_category < 0 || cfg.noise < 0) throw ConfigError("counts must be non-negative");
  SyntheticSpec spec;
  for (Category c : kAllCategories) spec[c] = cfg.per_category;
  spec.noise = cfg.noise;
  Corpus corpus = generate_synthetic_corpus(spec, cfg.seed);
  save_corpus(corpus, cfg.out);
  out << "wrote " << corpus.pairs.size() << " pairs to " << cfg.out << "\n";
  return kExitOk;
}

int cmd_split(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (!(cfg.dev_fraction > 0.0 && cfg.dev_fraction < 1.0)) {
    throw ConfigError("--dev-fraction must lie in (0, 1)");
  }
  Corpus corpus = load_corpus(cfg.corpus, load_options(cfg, err));
  auto [dev, test] = split_corpus(corpus, cfg.dev_fraction, cfg.seed);
  save_corpus(dev, cfg.out);
  save_corpus(test, cfg.test_out);
  out << "dev " << dev.pairs.size() << " -> " << cfg.out << "\n"
      << "test " << test.pairs.size() << " -> " << cfg.test_out << "\n";
  return kExitOk;
}

int cmd_mine(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  check_params(cfg.mining);
  fs::path lex_dir = lexicon_dir(cfg);
  Lexicons lexicons = load_lexicons(lex_dir);
  CategoryMapping mapping = CategoryMapping::load(mapping_path(cfg, lex_dir));
  Corpus dev = load_corpus(cfg.corpus, load_options(cfg, err));
  std::vector<Transaction> txs = extract_transactions(dev, lexicons);
  std::vector<FrequentItemset> itemsets = mine_frequent_itemsets(txs, cfg.mining);
  std::vector<AssociationRule> rules = derive_rules(itemsets, txs, cfg.mining);
  RuleBase rb = assign_categories(std::move(rules), mapping, cfg.mining,
                                  corpus_fingerprint(txs), cfg.strict);
  save_rulebase(rb, cfg.out);

  std::map<Category, int> counts;
  for (Category c : kAllCategories) counts[c] = 0;
  for (const AssociationRule& r : rb.rules) {
    if (r.category) ++counts[*r.category];
  }
  for (Category c : kAllCategories) out << to_string(c) << "\t" << counts[c] << "\n";
  out << "total\t" << rb.rules.size() << "\n";
  if (rb.rules.empty()) err << "warning: no rules met the support and confidence thresholds\n";
  return kExitOk;
}

int cmd_tune(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  check_params(cfg.sa);
  Lexicons lexicons = load_lexicons(lexicon_dir(cfg));
  Corpus dev = load_corpus(cfg.corpus, load_options(cfg, err));
  SaParams params = cfg.sa;
  params.seed = cfg.seed;
  TuneResult result = tune(dev, lexicons, params);
  save_model(result.model, cfg.out);
  std::ostringstream line;
  line.precision(6);
  line << std::fixed << "objective " << result.initial_objective << " -> "
       << result.best_objective << "\n";
  out << line.str();
  return kExitOk;
}

// Gold mode needs a category on every pair, which non-contradictions lack.
int cmd_classify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  DetectMode mode = detect_mode(cfg, "vote");
  Lexicons lexicons = load_lexicons(lexicon_dir(cfg));
  Detector detector(load_rulebase(cfg.rulebase), model_or_initial(cfg, err), lexicons);
  Corpus corpus = load_corpus(cfg.corpus, load_options(cfg, err));
  std::string jsonl;
  for (const SentencePair& pair : corpus.pairs) {
    jsonl += format_verdict(detector.detect(pair, mode));
    jsonl += '\n';
  }
  if (cfg.out.empty()) {
    out << jsonl;
  } else {
    write_text(cfg.out, jsonl);
  }
  return kExitOk;
}

int cmd_eval(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  DetectMode mode = detect_mode(cfg, "gold");
  Lexicons lexicons = load_lexicons(lexicon_dir(cfg));
  Detector detector(load_rulebase(cfg.rulebase), model_or_initial(cfg, err), lexicons);
  Corpus test = load_corpus(cfg.corpus, load_options(cfg, err));
  Report report = evaluate(test, detector, mode);
  out << format_report_table(report);
  if (!cfg.out.empty()) write_text(cfg.out, format_report_json(report));
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Rule-based contradiction detection for annotated sentence pairs", "contra"};
  app.require_subcommand(1);

  auto add_corpus = [&cfg](CLI::App* sub) {
    sub->add_option("--corpus", cfg.corpus, "Pair corpus (JSONL)")->required();
    sub->add_flag("--strict", cfg.strict, "Reject unknown fields and ambiguous mappings");
  };
  auto add_lexicons = [&cfg](CLI::App* sub) {
    sub->add_option("--lexicons", cfg.lexicons,
                    std::string("Lexicon directory (default: $") + kLexiconDirEnv + ")");
  };
  auto add_detector = [&cfg](CLI::App* sub, const std::string& default_mode) {
    sub->add_option("--rulebase", cfg.rulebase, "Mined rule base (JSON)")->required();
    sub->add_option("--model", cfg.model, "Tuned baseline model (JSON)");
    sub->add_option("--mode", cfg.mode, "gold|classify|vote (default: " + default_mode + ")");
  };

  CLI::App* validate = app.add_subcommand("validate", "Check a corpus file record by record");
  validate->add_option("--corpus", cfg.corpus, "Pair corpus (JSONL)")->required();
  validate->add_flag("--strict", cfg.strict, "Reject unknown fields");

  CLI::App* synth = app.add_subcommand("synth", "Generate a synthetic corpus");
  synth->add_option("--per-category", cfg.per_category, "Contradictions per category")
      ->capture_default_str();
  synth->add_option("--noise", cfg.noise, "Non-contradiction pairs")->capture_default_str();
  synth->add_option("--seed", cfg.seed)->capture_default_str();
  synth->add_option("--out", cfg.out, "Output corpus")->required();

  CLI::App* split = app.add_subcommand("split", "Split a corpus into dev and test parts");
  add_corpus(split);
  split->add_option("--dev-fraction", cfg.dev_fraction)->capture_default_str();
  split->add_option("--seed", cfg.seed)->capture_default_str();
  split->add_option("--out", cfg.out, "Dev corpus output")->required();
  split->add_option("--test-out", cfg.test_out, "Test corpus output")->required();

  CLI::App* mine = app.add_subcommand("mine", "Mine categorized rules from a dev corpus");
  add_corpus(mine);
  add_lexicons(mine);
  mine->add_option("--mapping", cfg.mapping,
                   "Category mapping (default: category_mapping.json beside the lexicons)");
  mine->add_option("--min-support", cfg.mining.min_support)->capture_default_str();
  mine->add_option("--min-confidence", cfg.mining.min_confidence)->capture_default_str();
  mine->add_option("--max-antecedent", cfg.mining.max_antecedent_size)->capture_default_str();
  mine->add_option("--out", cfg.out, "Rule base output")->required();

  CLI::App* tune_cmd = app.add_subcommand("tune", "Tune the baseline by simulated annealing");
  add_corpus(tune_cmd);
  add_lexicons(tune_cmd);
  tune_cmd->add_option("--iterations", cfg.sa.iterations)->capture_default_str();
  tune_cmd->add_option("--temperature", cfg.sa.initial_temperature)->capture_default_str();
  tune_cmd->add_option("--cooling", cfg.sa.cooling_rate)->capture_default_str();
  tune_cmd->add_option("--step", cfg.sa.step_size)->capture_default_str();
  tune_cmd->add_option("--seed", cfg.seed)->capture_default_str();
  tune_cmd->add_option("--out", cfg.out, "Model output")->required();

  CLI::App* classify = app.add_subcommand("classify", "Emit one verdict per pair (JSONL)");
  add_corpus(classify);
  add_lexicons(classify);
  add_detector(classify, "vote");
  classify->add_option("--out", cfg.out, "Verdict output (default: stdout)");

  CLI::App* eval = app.add_subcommand("eval", "Score verdicts against gold labels");
  add_corpus(eval);
  add_lexicons(eval);
  add_detector(eval, "gold");
  eval->add_option("--out", cfg.out, "JSON report output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfigError;
  }

  try {
    if (validate->parsed()) return cmd_validate(cfg, out, err);
    if (synth->parsed()) return cmd_synth(cfg, out, err);
    if (split->parsed()) return cmd_split(cfg, out, err);
    if (mine->parsed()) return cmd_mine(cfg, out, err);
    if (tune_cmd->parsed()) return cmd_tune(cfg, out, err);
    if (classify->parsed()) return cmd_classify(cfg, out, err);
    if (eval->parsed()) return cmd_eval(cfg, out, err);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitDataError;
  }
  return kExitConfigError;
}

}  // namespace contra
