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

// Data model for annotated sentence pairs and the JSONL corpus format.
//
// Annotations (POS, dependencies, SRL, NER) are produced by external tools
// and ingested as-is. Token indices are 1-based, head 0 marks the root.

#ifndef CONTRA_CORPUS_H_
#define CONTRA_CORPUS_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace contra {

enum class PosTag {
  kV,
  kNSingCom,
  kNPlur,
  kAdj,
  kAdv,
  kNum,
  kQuant,
  kPro,
  kPrep,
  kConj,
  kPunc,
  kO,
};

enum class Polarity { kPos, kNeg, kNone };

enum class NerTag { kPer, kLoc, kOrg, kDat, kTim, kNum, kO };

enum class GoldLabel { kContradiction, kEntailment, kNeutral };

// OTHERS merges the factive, lexical and world-knowledge types.
enum class Category { kNegation, kNumeric, kAntonym, kStructural, kOthers };

inline constexpr Category kAllCategories[] = {
    Category::kNegation, Category::kNumeric, Category::kAntonym,
    Category::kStructural, Category::kOthers};

std::string_view to_string(PosTag tag);
std::string_view to_string(Polarity polarity);
std::string_view to_string(NerTag tag);
std::string_view to_string(GoldLabel label);
std::string_view to_string(Category category);

std::optional<PosTag> parse_pos_tag(std::string_view s);
std::optional<Polarity> parse_polarity(std::string_view s);
std::optional<NerTag> parse_ner_tag(std::string_view s);
std::optional<GoldLabel> parse_gold_label(std::string_view s);
std::optional<Category> parse_category(std::string_view s);

struct Token {
  std::string form;
  std::string lemma;
  PosTag pos = PosTag::kO;
  Polarity polarity = Polarity::kNone;
  NerTag ner = NerTag::kO;
  int head = 0;
  std::string deprel;

  bool operator==(const Token&) const = default;
};

struct SrlArg {
  std::string role;
  int start = 0;  // inclusive, 1-based
  int end = 0;    // inclusive, 1-based

  bool operator==(const SrlArg&) const = default;
};

struct SrlFrame {
  int predicate = 0;
  std::vector<SrlArg> args;

  bool operator==(const SrlFrame&) const = default;
};

struct AnnotatedSentence {
  std::string text;
  std::vector<Token> tokens;
  std::vector<SrlFrame> srl;

  std::size_t size() const { return tokens.size(); }
  // Token for a 1-based index.
  const Token& at(int index) const { return tokens[index - 1]; }

  bool operator==(const AnnotatedSentence&) const = default;
};

struct SentencePair {
  std::string id;
  AnnotatedSentence premise;
  AnnotatedSentence hypothesis;
  GoldLabel gold = GoldLabel::kNeutral;
  std::optional<Category> category;

  // ENTAILMENT and NEUTRAL both count as not-contradiction when scoring.
  bool is_contradiction() const { return gold == GoldLabel::kContradiction; }

  bool operator==(const SentencePair&) const = default;
};

struct Corpus {
  std::vector<SentencePair> pairs;
  std::string provenance;

  std::size_t size() const { return pairs.size(); }
  bool empty() const { return pairs.empty(); }
};

// NFC-normalizes a UTF-8 string. Invalid UTF-8 is returned unchanged.
std::string normalize_nfc(std::string_view utf8);

// Polarity for a token whose file record omits it: a verb whose form starts
// with the negation prefix "ن" while its lemma does not is NEG, other verbs
// are POS, everything else NONE.
Polarity infer_polarity(const Token& token);

// Checks the sentence invariants. Returns an empty string when valid,
// otherwise a short reason ("head out of range", ...).
std::string check_sentence(const AnnotatedSentence& sentence);
std::string check_pair(const SentencePair& pair);

struct LoadOptions {
  // Reject unknown fields instead of warning about them.
  bool strict = false;
  // Receives non-fatal diagnostics. Defaults to stderr when empty.
  std::function<void(const std::string&)> warn;
};

// Parses one JSONL record. Throws MalformedRecord on any schema or
// invariant violation.
SentencePair parse_pair_record(std::string_view line, std::size_t line_number,
                               const LoadOptions& options = {});
std::string format_pair_record(const SentencePair& pair);

Corpus load_corpus(const std::filesystem::path& path,
                   const LoadOptions& options = {});
void write_corpus(const Corpus& corpus, std::ostream& out);
void save_corpus(const Corpus& corpus, const std::filesystem::path& path);

struct Diagnostic {
  std::size_t line = 0;
  std::string message;
};

// Validates every record of a corpus file without stopping at the first
// error. Throws IoError if the file cannot be opened.
std::vector<Diagnostic> validate_corpus_file(const std::filesystem::path& path,
                                             const LoadOptions& options = {});

// Deterministic disjoint split; |dev| = round(dev_fraction * |corpus|).
// Both parts keep the original relative order.
std::pair<Corpus, Corpus> split_corpus(const Corpus& corpus,
                                       double dev_fraction,
                                       std::uint64_t seed);

}  // namespace contra

#endif  // CONTRA_CORPUS_H_
