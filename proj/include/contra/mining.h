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

// Class association rule mining over transactions: levelwise Apriori,
// rule derivation, and rule-to-category assignment through a mapping file.

#ifndef CONTRA_MINING_H_
#define CONTRA_MINING_H_

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "contra/corpus.h"
#include "contra/tuples.h"

namespace contra {

struct MiningParams {
  double min_support = 0.05;
  double min_confidence = 0.7;
  int max_antecedent_size = 3;

  // Throws OutOfRange.
  void validate() const;
  bool operator==(const MiningParams&) const = default;
};

// Label items share the alphabet with tuple encodings.
inline constexpr std::string_view kContraItem = "CONTRA";
inline constexpr std::string_view kNotContraItem = "NOTCONTRA";

struct FrequentItemset {
  std::vector<std::string> items;  // sorted
  std::size_t count = 0;
  double support = 0.0;

  bool operator==(const FrequentItemset&) const = default;
};

// All itemsets over items + label with support >= min_support and size <=
// max_antecedent_size + 1, sorted by (size, lexicographic items). Throws
// EmptyCorpus for an empty transaction list.
std::vector<FrequentItemset> mine_frequent_itemsets(const std::vector<Transaction>& transactions,
                                                    const MiningParams& params);

struct AssociationRule {
  std::vector<std::string> antecedent;  // sorted, non-empty
  TxLabel consequent = TxLabel::kContra;
  double support = 0.0;
  double confidence = 0.0;
  std::optional<Category> category;

  bool operator==(const AssociationRule&) const = default;
};

// One rule per frequent itemset holding exactly one label item, kept when
// confidence >= min_confidence. Order follows the itemset order.
std::vector<AssociationRule> derive_rules(const std::vector<FrequentItemset>& itemsets,
                                          const std::vector<Transaction>& transactions,
                                          const MiningParams& params);

// Ordered list of (pattern, category). A pattern is a tuple kind, optionally
// followed by per-field globs: "POL", "DEP(*,NUM,*)", "POL(*-NEG,*-POS)".
class CategoryMapping {
 public:
  struct Entry {
    std::string pattern;
    Category category;
    std::string kind;
    std::optional<std::vector<std::string>> fields;
  };

  // Throws MalformedMapping.
  static CategoryMapping parse(std::string_view json_text);
  static CategoryMapping load(const std::filesystem::path& path);

  // True if the tuple encoding matches the entry's pattern.
  static bool matches(const Entry& entry, std::string_view encoding);

  // First entry (file order) matched by any antecedent item. In strict mode
  // throws AmbiguousMapping if entries of different categories match.
  std::optional<Category> categorize(const std::vector<std::string>& antecedent,
                                     bool strict = false) const;

  const std::vector<Entry>& entries() const { return entries_; }

 private:
  std::vector<Entry> entries_;
};

struct RuleBase {
  std::vector<AssociationRule> rules;
  MiningParams params;
  std::string provenance;

  bool operator==(const RuleBase&) const = default;
};

RuleBase assign_categories(std::vector<AssociationRule> rules, const CategoryMapping& mapping,
                           const MiningParams& params, std::string provenance,
                           bool strict = false);

// Stable hash of the transaction dump, e.g. "fnv1a64:0123456789abcdef".
std::string corpus_fingerprint(const std::vector<Transaction>& transactions);

std::string format_rulebase(const RuleBase& rb);
// Throws MalformedRuleBaseFile or VersionMismatch.
RuleBase parse_rulebase(std::string_view text);
void save_rulebase(const RuleBase& rb, const std::filesystem::path& path);
RuleBase load_rulebase(const std::filesystem::path& path);

}  // namespace contra

#endif  // CONTRA_MINING_H_
