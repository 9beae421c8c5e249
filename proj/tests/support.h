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

// Sentence builders and a random well-formed pair generator for tests.

#ifndef CONTRA_TESTS_SUPPORT_H_
#define CONTRA_TESTS_SUPPORT_H_

#include <algorithm>
#include <cmath>
#include <set>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "contra/corpus.h"
#include "contra/mining.h"
#include "oracles.h"

namespace contra::testing {

inline Token tok(std::string form, PosTag pos, int head, std::string deprel,
                 Polarity polarity = Polarity::kNone, NerTag ner = NerTag::kO,
                 std::string lemma = "") {
  if (lemma.empty()) lemma = form;
  return {std::move(form), std::move(lemma), pos, polarity, ner, head, std::move(deprel)};
}

inline AnnotatedSentence sent(std::vector<Token> tokens, std::vector<SrlFrame> srl = {}) {
  AnnotatedSentence s;
  for (const Token& t : tokens) {
    if (!s.text.empty()) s.text += ' ';
    s.text += t.form;
  }
  s.tokens = std::move(tokens);
  s.srl = std::move(srl);
  return s;
}

inline SentencePair make_pair(AnnotatedSentence premise, AnnotatedSentence hypothesis,
                              GoldLabel gold = GoldLabel::kContradiction,
                              std::optional<Category> category = std::nullopt,
                              std::string id = "p1") {
  return {std::move(id), std::move(premise), std::move(hypothesis), gold, category};
}

inline SentencePair swapped(const SentencePair& p) {
  SentencePair q = p;
  std::swap(q.premise, q.hypothesis);
  return q;
}

// "علی به مدرسه رفت" with the verb negated on request.
inline AnnotatedSentence ali_school(bool negated) {
  return sent({tok("علی", PosTag::kNSingCom, 4, "nsubj", Polarity::kNone, NerTag::kPer),
               tok("به", PosTag::kPrep, 4, "prep"), tok("مدرسه", PosTag::kNSingCom, 2, "pobj"),
               tok(negated ? "نرفت" : "رفت", PosTag::kV, 0, "root",
                   negated ? Polarity::kNeg : Polarity::kPos, NerTag::kO, "رفت")},
              {{4, {{"A0", 1, 1}, {"LOC", 2, 3}}}});
}

// "<numeral> دختر در خیابان نشستند".
inline AnnotatedSentence girls(const std::string& numeral) {
  return sent({tok(numeral, PosTag::kNum, 2, "num", Polarity::kNone, NerTag::kNum),
               tok("دختر", PosTag::kNSingCom, 5, "nsubj"), tok("در", PosTag::kPrep, 5, "prep"),
               tok("خیابان", PosTag::kNSingCom, 3, "pobj"),
               tok("نشستند", PosTag::kV, 0, "root", Polarity::kPos)},
              {{5, {{"A0", 1, 2}, {"LOC", 3, 4}}}});
}

// Random sentences that satisfy every load-time invariant. Lemmas are drawn
// from a small pool that includes lexicon entries so features fire.
class RandomPairs {
 public:
  explicit RandomPairs(std::uint64_t seed) : rng_(seed) {}

  AnnotatedSentence sentence() {
    int n = uniform(1, 9);
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 1);
    std::shuffle(order.begin(), order.end(), rng_);
    std::vector<int> head(n + 1, 0);
    for (int i = 1; i < n; ++i) head[order[i]] = order[uniform(0, i - 1)];

    static const std::vector<std::string> kLemmas = {
        "رفت", "آمد", "خرید", "داغ", "سرد", "خوب", "بد", "خشک", "خیس", "کتاب",
        "علی", "مریم", "تهران", "شیراز", "به", "در", "هیچ‌کس", "هرگز", "سه", "پنج",
        "آب", "روغن", "زیبا", "زشت", "قوی", "ضعیف", "بزرگ", "کوچک"};
    static const PosTag kTags[] = {PosTag::kV,    PosTag::kNSingCom, PosTag::kNPlur,
                                   PosTag::kAdj,  PosTag::kAdv,      PosTag::kNum,
                                   PosTag::kQuant, PosTag::kPro,     PosTag::kPrep,
                                   PosTag::kConj, PosTag::kPunc,     PosTag::kO};
    static const NerTag kNer[] = {NerTag::kPer, NerTag::kLoc, NerTag::kOrg, NerTag::kDat,
                                  NerTag::kTim, NerTag::kNum, NerTag::kO, NerTag::kO};
    static const char* kRels[] = {"nsubj", "obj", "amod", "num", "advmod", "prep", "acomp"};

    std::vector<Token> tokens;
    for (int i = 1; i <= n; ++i) {
      PosTag pos = kTags[uniform(0, 11)];
      const std::string& lemma = kLemmas[uniform(0, static_cast<int>(kLemmas.size()) - 1)];
      Polarity pol = Polarity::kNone;
      std::string form = lemma;
      if (pos == PosTag::kV || pos == PosTag::kQuant || pos == PosTag::kAdv) {
        pol = uniform(0, 1) ? Polarity::kNeg : Polarity::kPos;
        if (pos == PosTag::kV && pol == Polarity::kNeg) form = "ن" + lemma;
      }
      tokens.push_back(tok(form, pos, head[i], head[i] == 0 ? "root" : kRels[uniform(0, 6)], pol,
                           kNer[uniform(0, 7)], lemma));
    }

    std::vector<SrlFrame> srl;
    int frames = uniform(0, 2);
    static const char* kRoles[] = {"A0", "A1", "A2", "TMP", "LOC", "MNR"};
    for (int f = 0; f < frames; ++f) {
      SrlFrame frame{uniform(1, n), {}};
      std::vector<int> roles = {0, 1, 2, 3, 4, 5};
      std::shuffle(roles.begin(), roles.end(), rng_);
      int args = uniform(0, 3);
      for (int a = 0; a < args; ++a) {
        int start = uniform(1, n);
        frame.args.push_back({kRoles[roles[a]], start, uniform(start, n)});
      }
      srl.push_back(std::move(frame));
    }
    return sent(std::move(tokens), std::move(srl));
  }

  SentencePair pair(const std::string& id = "r") {
    static const GoldLabel kGold[] = {GoldLabel::kContradiction, GoldLabel::kEntailment,
                                      GoldLabel::kNeutral};
    GoldLabel gold = kGold[uniform(0, 2)];
    std::optional<Category> category;
    if (gold == GoldLabel::kContradiction) category = kAllCategories[uniform(0, 4)];
    return make_pair(sentence(), sentence(), gold, category, id);
  }

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  std::mt19937_64& rng() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

// Up to 50 transactions over at most max_items canonical items, random
// density and labels.
inline std::vector<Transaction> random_transactions(std::mt19937_64& rng, int max_items) {
  std::uniform_int_distribution<int> n_tx(1, 50);
  std::uniform_int_distribution<int> n_items(1, max_items);
  std::bernoulli_distribution coin(0.5);
  const int universe = n_items(rng);
  std::bernoulli_distribution present(std::uniform_real_distribution<double>(0.2, 0.8)(rng));
  std::vector<Transaction> out;
  const int n = n_tx(rng);
  for (int i = 0; i < n; ++i) {
    std::set<std::string> items;
    for (int k = 0; k < universe; ++k) {
      if (present(rng)) items.insert("DEP(r" + std::string(1, static_cast<char>('a' + k)) + ",NUM,V)");
    }
    out.push_back({std::move(items), coin(rng) ? TxLabel::kContra : TxLabel::kNotContra,
                   "t" + std::to_string(i)});
  }
  return out;
}

// Recovers the oracle's integer counts from mined ratios over n transactions.
inline std::set<oracle::Rule> to_oracle_rules(const std::vector<AssociationRule>& rules,
                                              std::size_t n) {
  std::set<oracle::Rule> out;
  for (const AssociationRule& r : rules) {
    auto count = static_cast<std::size_t>(std::llround(r.support * static_cast<double>(n)));
    auto covered =
        static_cast<std::size_t>(std::llround(static_cast<double>(count) / r.confidence));
    out.insert({r.antecedent, std::string(to_string(r.consequent)), count, covered});
  }
  return out;
}

}  // namespace contra::testing

#endif  // CONTRA_TESTS_SUPPORT_H_
