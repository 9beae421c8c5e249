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

// Lexical resources consumed by the feature and tuple extractors. All
// lookups are by lemma.

#ifndef CONTRA_LEXICONS_H_
#define CONTRA_LEXICONS_H_

#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>

namespace contra {

// Unordered lemma pairs, stored with the smaller lemma first so lookups are
// symmetric by construction.
class AntonymLexicon {
 public:
  // Returns false for a reflexive pair, which is never stored.
  bool add(std::string_view a, std::string_view b);
  bool are_antonyms(std::string_view a, std::string_view b) const;
  bool contains(std::string_view lemma) const;

  std::size_t size() const { return pairs_.size(); }
  const std::set<std::pair<std::string, std::string>>& pairs() const {
    return pairs_;
  }

 private:
  std::set<std::pair<std::string, std::string>> pairs_;
  std::set<std::string, std::less<>> members_;
};

enum class Sentiment { kPositive, kNegative };

struct PolarityEntry {
  Sentiment sentiment = Sentiment::kPositive;
  double strength = 1.0;  // (0, 1]

  double signed_strength() const {
    return sentiment == Sentiment::kPositive ? strength : -strength;
  }
  bool operator==(const PolarityEntry&) const = default;
};

class PolarityLexicon {
 public:
  // Returns false if the lemma already has an entry.
  bool add(std::string lemma, PolarityEntry entry);
  // nullopt for lemmas outside the lexicon (neutral).
  std::optional<PolarityEntry> polarity_of(std::string_view lemma) const;
  std::size_t size() const { return entries_.size(); }

 private:
  std::unordered_map<std::string, PolarityEntry> entries_;
};

struct MarkerLists {
  std::set<std::string, std::less<>> stopwords;
  std::set<std::string, std::less<>> negative_quantifiers;
  std::set<std::string, std::less<>> negative_adverbs;

  bool is_stopword(std::string_view lemma) const {
    return stopwords.find(lemma) != stopwords.end();
  }
  bool is_negative_quantifier(std::string_view lemma) const {
    return negative_quantifiers.find(lemma) != negative_quantifiers.end();
  }
  bool is_negative_adverb(std::string_view lemma) const {
    return negative_adverbs.find(lemma) != negative_adverbs.end();
  }
};

struct Lexicons {
  AntonymLexicon antonyms;
  PolarityLexicon polarity;
  MarkerLists markers;
};

inline constexpr std::string_view kAntonymsFile = "antonyms.tsv";
inline constexpr std::string_view kPolarityFile = "polarity.tsv";
inline constexpr std::string_view kStopwordsFile = "stopwords.txt";
inline constexpr std::string_view kNegQuantifiersFile = "neg_quantifiers.txt";
inline constexpr std::string_view kNegAdverbsFile = "neg_adverbs.txt";

// Throws MissingLexiconFile or MalformedLexiconLine.
Lexicons load_lexicons(const std::filesystem::path& dir);

}  // namespace contra

#endif  // CONTRA_LEXICONS_H_
