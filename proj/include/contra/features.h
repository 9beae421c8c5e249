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

// The ten baseline features. Every feature is a pure function of the pair
// and the lexicons, symmetric in premise/hypothesis, and lies in [0, 1].

#ifndef CONTRA_FEATURES_H_
#define CONTRA_FEATURES_H_

#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "contra/corpus.h"
#include "contra/lexicons.h"

namespace contra {

struct FeatureVector {
  double sentiment_disagreement = 0.0;
  double ne_mismatch = 0.0;
  double length_difference = 0.0;
  double adjective_contrast = 0.0;
  double verb_contrast = 0.0;
  double negation = 0.0;
  double common_words = 0.0;
  double cosine_similarity = 0.0;
  double srl_mismatch = 0.0;
  double antonym = 0.0;

  static constexpr std::size_t kSize = 10;
  static constexpr std::array<std::string_view, kSize> kNames = {
      "sentiment_disagreement", "ne_mismatch",       "length_difference",
      "adjective_contrast",     "verb_contrast",     "negation",
      "common_words",           "cosine_similarity", "srl_mismatch",
      "antonym"};
  // common_words and cosine_similarity measure agreement, not contrast.
  static constexpr std::array<bool, kSize> kIsSimilarity = {
      false, false, false, false, false, false, true, true, false, false};

  std::array<double, kSize> values() const;
  static FeatureVector from_values(const std::array<double, kSize>& v);

  bool operator==(const FeatureVector&) const = default;
};

using LemmaBag = std::map<std::string, int>;

// Cosine of two count vectors; 0 when either is empty. Exactly symmetric.
double bag_cosine(const LemmaBag& a, const LemmaBag& b);

// Lemma counts of the sentence with stopwords and punctuation removed.
LemmaBag content_bag(const AnnotatedSentence& s, const MarkerLists& markers);
// Same filter restricted to tokens [start, end] (1-based, inclusive).
LemmaBag span_bag(const AnnotatedSentence& s, int start, int end,
                  const MarkerLists& markers);

bool is_negative_marker(const Token& t, const MarkerLists& markers);

// For each 1-based token index, the nearest verb on its head chain
// (itself included), or 0 when the chain reaches the root without one.
// Index 0 of the result is unused.
std::vector<int> clause_heads(const AnnotatedSentence& s);

// NEG if the verb is NEG or a negative quantifier/adverb sits in its clause.
// Persian negative concord: a negative marker with a NEG verb stays NEG.
Polarity effective_polarity(const AnnotatedSentence& s, int verb_index,
                            const MarkerLists& markers);

// Strength-weighted polarity sum, with the sign of each polar word flipped
// when its clause is negated.
double sentence_sentiment(const AnnotatedSentence& s, const PolarityLexicon& lexicon,
                          const MarkerLists& markers);

// -1, 0 or +1, treating magnitudes below 1e-12 as zero.
int sentiment_sign(double score);

double f_sentiment_disagreement(const SentencePair& pair, const PolarityLexicon& lexicon,
                                const MarkerLists& markers);
double f_ne_mismatch(const SentencePair& pair);
double f_length_difference(const SentencePair& pair);
double f_adjective_contrast(const SentencePair& pair, const AntonymLexicon& antonyms);
double f_verb_contrast(const SentencePair& pair, const AntonymLexicon& antonyms);
double f_negation(const SentencePair& pair, const MarkerLists& markers);
// Both similarity features are 1 when neither sentence has a content word.
double f_common_words(const SentencePair& pair, const MarkerLists& markers);
double f_cosine_similarity(const SentencePair& pair, const MarkerLists& markers);
double f_srl_mismatch(const SentencePair& pair, const MarkerLists& markers);
double f_antonym(const SentencePair& pair, const AntonymLexicon& antonyms);

FeatureVector extract_feature_vector(const SentencePair& pair, const Lexicons& lexicons);

}  // namespace contra

#endif  // CONTRA_FEATURES_H_
