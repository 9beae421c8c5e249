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

#include "contra/matchers.h"

#include <algorithm>

#include "contra/error.h"
#include "contra/features.h"
#include "json.hpp"

namespace contra {
namespace {

constexpr Category kRuleCategories[] = {Category::kNegation, Category::kNumeric,
                                        Category::kAntonym, Category::kStructural};

bool has_num(const AnnotatedSentence& s) {
  return std::any_of(s.tokens.begin(), s.tokens.end(),
                     [](const Token& t) { return t.pos == PosTag::kNum; });
}

bool has_negative_marker(const AnnotatedSentence& s, const MarkerLists& markers) {
  return std::any_of(s.tokens.begin(), s.tokens.end(),
                     [&](const Token& t) { return is_negative_marker(t, markers); });
}

bool has_cross_antonym(const SentencePair& pair, const AntonymLexicon& antonyms) {
  for (const Token& a : pair.premise.tokens) {
    if (!antonyms.contains(a.lemma)) continue;
    for (const Token& b : pair.hypothesis.tokens) {
      if (antonyms.are_antonyms(a.lemma, b.lemma)) return true;
    }
  }
  return false;
}

std::string join_antecedent(const std::vector<std::string>& items) {
  std::string out;
  for (const std::string& item : items) {
    if (!out.empty()) out += '&';
    out += item;
  }
  return out;
}

}  // namespace

std::string_view to_string(DetectMode mode) {
  switch (mode) {
    case DetectMode::kGoldCategory: return "GOLD_CATEGORY";
    case DetectMode::kClassified: return "CLASSIFIED";
    case DetectMode::kVoting: return "VOTING";
  }
  return "?";
}

std::optional<DetectMode> parse_detect_mode(std::string_view s) {
  if (s == "gold" || s == "GOLD_CATEGORY") return DetectMode::kGoldCategory;
  if (s == "classify" || s == "CLASSIFIED") return DetectMode::kClassified;
  if (s == "vote" || s == "VOTING") return DetectMode::kVoting;
  return std::nullopt;
}

std::vector<AssociationRule> match_category(const RuleBase& rb, Category category,
                                            const Transaction& tx) {
  std::vector<AssociationRule> fired;
  if (category == Category::kOthers) return fired;
  for (const AssociationRule& rule : rb.rules) {
    if (rule.consequent != TxLabel::kContra || rule.category != category) continue;
    bool covered = std::all_of(rule.antecedent.begin(), rule.antecedent.end(),
                               [&](const std::string& item) { return tx.items.count(item) > 0; });
    if (covered) fired.push_back(rule);
  }
  return fired;
}

Category classify_category(const SentencePair& pair, const Lexicons& lex) {
  const auto& p = pair.premise;
  const auto& h = pair.hypothesis;
  bool neg_p = has_negative_marker(p, lex.markers);
  bool neg_h = has_negative_marker(h, lex.markers);
  if (f_negation(pair, lex.markers) > 0.0 || neg_p != neg_h) return Category::kNegation;
  if (has_num(p) && has_num(h)) return Category::kNumeric;
  if (has_cross_antonym(pair, lex.antonyms)) return Category::kAntonym;
  if (!p.srl.empty() && !h.srl.empty()) {
    const std::string swap = encode(SrlSimTuple{"A0", "A1", SimilarityBin::kB2});
    for (const Tuple& t : extract_srl_tuples(pair, lex.markers)) {
      if (encode(t) == swap) return Category::kStructural;
    }
  }
  return Category::kOthers;
}

Detector::Detector(RuleBase rules, BaselineModel model, Lexicons lexicons)
    : rules_(std::move(rules)), model_(model), lexicons_(std::move(lexicons)) {}

Verdict Detector::run_category(const SentencePair& pair, const Transaction& tx,
                               Category category, DetectMode mode) const {
  Verdict v;
  v.pair_id = pair.id;
  v.mode = mode;
  v.category = category;
  if (category == Category::kOthers) {
    double score = score_pair(model_, extract_feature_vector(pair, lexicons_));
    v.baseline_score = score;
    v.label = decide(model_, score);
  } else {
    v.fired_rules = match_category(rules_, category, tx);
    v.label = v.fired_rules.empty() ? BinaryLabel::kNotContradiction
                                    : BinaryLabel::kContradiction;
  }
  return v;
}

Verdict Detector::detect_as(const SentencePair& pair, Category category, DetectMode mode) const {
  Transaction tx;
  if (category != Category::kOthers) tx = extract_transaction(pair, lexicons_);
  return run_category(pair, tx, category, mode);
}

Verdict Detector::detect(const SentencePair& pair, DetectMode mode) const {
  switch (mode) {
    case DetectMode::kGoldCategory:
      if (!pair.category) {
        throw MissingGoldCategory("pair '" + pair.id + "' has no gold category");
      }
      return detect_as(pair, *pair.category, mode);
    case DetectMode::kClassified:
      return detect_as(pair, classify_category(pair, lexicons_), mode);
    case DetectMode::kVoting:
      break;
  }
  // Voting: any firing source makes a contradiction; the reported category is
  // the highest-priority source.
  Verdict v;
  v.pair_id = pair.id;
  v.mode = mode;
  Transaction tx = extract_transaction(pair, lexicons_);
  for (Category c : kRuleCategories) {
    auto fired = match_category(rules_, c, tx);
    if (fired.empty()) continue;
    if (!v.category) v.category = c;
    v.fired_rules.insert(v.fired_rules.end(), fired.begin(), fired.end());
  }
  double score = score_pair(model_, extract_feature_vector(pair, lexicons_));
  v.baseline_score = score;
  bool baseline_fires = decide(model_, score) == BinaryLabel::kContradiction;
  if (!v.category && baseline_fires) v.category = Category::kOthers;
  v.label = v.category ? BinaryLabel::kContradiction : BinaryLabel::kNotContradiction;
  return v;
}

Verdict detect(const SentencePair& pair, const RuleBase& rb, const BaselineModel& model,
               const Lexicons& lexicons, DetectMode mode) {
  return Detector(rb, model, lexicons).detect(pair, mode);
}

std::string format_verdict(const Verdict& v) {
  nlohmann::ordered_json j;
  j["id"] = v.pair_id;
  j["label"] = to_string(v.label);
  j["category"] = v.category ? nlohmann::ordered_json(to_string(*v.category))
                             : nlohmann::ordered_json(nullptr);
  j["fired"] = nlohmann::ordered_json::array();
  for (const AssociationRule& r : v.fired_rules) j["fired"].push_back(join_antecedent(r.antecedent));
  j["baseline_score"] =
      v.baseline_score ? nlohmann::ordered_json(*v.baseline_score) : nlohmann::ordered_json(nullptr);
  j["mode"] = to_string(v.mode);
  return j.dump();
}

}  // namespace contra
