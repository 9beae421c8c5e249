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

// Deterministic generator of annotated pairs with planted contradiction
// patterns, drawn from a closed template vocabulary.

#ifndef CONTRA_SYNTHETIC_H_
#define CONTRA_SYNTHETIC_H_

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "contra/corpus.h"
#include "contra/lexicons.h"

namespace contra {

struct SyntheticSpec {
  std::array<int, 5> per_category{};  // indexed like kAllCategories
  int noise = 0;                      // NEUTRAL / ENTAILMENT pairs

  int& operator[](Category c) { return per_category[static_cast<int>(c)]; }
  int operator[](Category c) const { return per_category[static_cast<int>(c)]; }
};

// Pair ids encode the template family ("neg-0003", "noise-0012"); the pairs
// are shuffled with the same seed.
Corpus generate_synthetic_corpus(const SyntheticSpec& spec, std::uint64_t seed);

// Lexical resources the template vocabulary relies on. The shipped lexicon
// directory must cover these.
struct SyntheticVocabulary {
  std::vector<std::pair<std::string, std::string>> antonyms;
  std::vector<std::pair<std::string, PolarityEntry>> polarity;
  std::vector<std::string> stopwords;
  std::vector<std::string> negative_quantifiers;
  std::vector<std::string> negative_adverbs;
};

const SyntheticVocabulary& synthetic_vocabulary();
Lexicons synthetic_lexicons();

}  // namespace contra

#endif  // CONTRA_SYNTHETIC_H_
