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

// Detection front end: per-category rule matching, the surface-cue category
// classifier, and the three test modes.

#ifndef CONTRA_MATCHERS_H_
#define CONTRA_MATCHERS_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "contra/baseline.h"
#include "contra/corpus.h"
#include "contra/lexicons.h"
#include "contra/mining.h"
#include "contra/tuples.h"

namespace contra {

enum class DetectMode { kGoldCategory, kClassified, kVoting };

std::string_view to_string(DetectMode mode);
// Accepts the CLI names (gold, classify, vote) and the dump names
// (GOLD_CATEGORY, CLASSIFIED, VOTING).
std::optional<DetectMode> parse_detect_mode(std::string_view s);

struct Verdict {
  std::string pair_id;
  BinaryLabel label = BinaryLabel::kNotContradiction;
  std::optional<Category> category;
  std::vector<AssociationRule> fired_rules;
  std::optional<double> baseline_score;
  DetectMode mode = DetectMode::kVoting;
};

// CONTRA rules of the category whose antecedent is contained in the
// transaction. Always empty for OTHERS, which has no rules.
std::vector<AssociationRule> match_category(const RuleBase& rb, Category category,
                                            const Transaction& tx);

// First cue in priority order NEGATION, NUMERIC, ANTONYM, STRUCTURAL,
// falling back to OTHERS.
Category classify_category(const SentencePair& pair, const Lexicons& lexicons);

class Detector {
 public:
  Detector(RuleBase rules, BaselineModel model, Lexicons lexicons);

  // Throws MissingGoldCategory in GOLD_CATEGORY mode when the pair has none.
  Verdict detect(const SentencePair& pair, DetectMode mode) const;
  // Runs the detector of one category; OTHERS goes to the baseline.
  Verdict detect_as(const SentencePair& pair, Category category, DetectMode mode) const;

  const RuleBase& rules() const { return rules_; }
  const BaselineModel& model() const { return model_; }
  const Lexicons& lexicons() const { return lexicons_; }

 private:
  Verdict run_category(const SentencePair& pair, const Transaction& tx, Category category,
                       DetectMode mode) const;

  RuleBase rules_;
  BaselineModel model_;
  Lexicons lexicons_;
};

Verdict detect(const SentencePair& pair, const RuleBase& rb, const BaselineModel& model,
               const Lexicons& lexicons, DetectMode mode);

// {"id", "label", "category", "fired", "baseline_score", "mode"} on one line.
std::string format_verdict(const Verdict& verdict);

}  // namespace contra

#endif  // CONTRA_MATCHERS_H_
