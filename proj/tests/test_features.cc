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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "contra/features.h"
#include "contra/synthetic.h"
#include "oracles.h"
#include "support.h"

using namespace contra;
using namespace contra::testing;
using doctest::Approx;

namespace {

Lexicons test_lexicons() {
  Lexicons lex;
  for (auto [a, b] : {std::pair{"داغ", "سرد"}, {"گرم", "سرد"}, {"won", "lost"},
                      {"wet", "dry"}, {"hot", "cold"}}) {
    lex.antonyms.add(a, b);
  }
  lex.polarity.add("well", {Sentiment::kPositive, 0.8});
  lex.polarity.add("nightmare", {Sentiment::kNegative, 0.6});
  lex.polarity.add("خوب", {Sentiment::kPositive, 0.8});
  for (const char* w : {"به", "در", "a", "the", "on", "is", "are", "my"}) {
    lex.markers.stopwords.insert(w);
  }
  lex.markers.negative_quantifiers.insert("هیچ‌کس");
  lex.markers.negative_adverbs.insert("هرگز");
  return lex;
}

const Lexicons kLex = test_lexicons();

// Flat sentence of nouns under one verb root, for bag-level examples.
AnnotatedSentence words(std::vector<std::string> lemmas) {
  std::vector<Token> tokens;
  tokens.push_back(tok("is", PosTag::kV, 0, "root", Polarity::kPos));
  for (const auto& l : lemmas) tokens.push_back(tok(l, PosTag::kNSingCom, 1, "dep"));
  return sent(std::move(tokens));
}

// Sentence of n content tokens.
AnnotatedSentence length_n(int n) {
  std::vector<std::string> lemmas;
  for (int i = 1; i < n; ++i) lemmas.push_back("w" + std::to_string(i));
  return words(lemmas);
}

// "<adj> shirt" under "has".
AnnotatedSentence shirt(const std::string& adjective) {
  return sent({tok("woman", PosTag::kNSingCom, 2, "nsubj"),
               tok("has", PosTag::kV, 0, "root", Polarity::kPos),
               tok(adjective, PosTag::kAdj, 4, "amod"), tok("shirt", PosTag::kNSingCom, 2, "obj")});
}

// "سوپ <adj> است": the soup is hot/cold.
AnnotatedSentence predicative_soup(const std::string& adjective) {
  return sent({tok("سوپ", PosTag::kNSingCom, 3, "nsubj"), tok(adjective, PosTag::kAdj, 3, "acomp"),
               tok("است", PosTag::kV, 0, "root", Polarity::kPos)},
              {{3, {{"A1", 1, 1}}}});
}

// Verb chain: the first lemma is the root, the rest hang off it.
AnnotatedSentence verbs(std::vector<std::string> lemmas) {
  std::vector<Token> tokens;
  for (std::size_t i = 0; i < lemmas.size(); ++i) {
    tokens.push_back(tok(lemmas[i], PosTag::kV, i == 0 ? 0 : 1, i == 0 ? "root" : "conj",
                         Polarity::kPos));
  }
  return sent(std::move(tokens));
}

}  // namespace

TEST_CASE("sentiment disagreement") {
  auto slept = sent({tok("john", PosTag::kNSingCom, 2, "nsubj", Polarity::kNone, NerTag::kPer),
                     tok("slept", PosTag::kV, 0, "root", Polarity::kPos),
                     tok("very", PosTag::kAdv, 4, "advmod"), tok("well", PosTag::kAdv, 2, "advmod")});
  auto nightmare = sent({tok("john", PosTag::kNSingCom, 2, "nsubj", Polarity::kNone, NerTag::kPer),
                         tok("had", PosTag::kV, 0, "root", Polarity::kPos),
                         tok("a", PosTag::kO, 4, "det"), tok("nightmare", PosTag::kNSingCom, 2, "obj")});
  auto neutral = words({"table"});
  CHECK(sentence_sentiment(slept, kLex.polarity, kLex.markers) == Approx(0.8));
  CHECK(sentence_sentiment(nightmare, kLex.polarity, kLex.markers) == Approx(-0.6));
  CHECK(f_sentiment_disagreement(make_pair(slept, nightmare), kLex.polarity, kLex.markers) == 1.0);
  CHECK(f_sentiment_disagreement(make_pair(neutral, neutral), kLex.polarity, kLex.markers) == 0.0);
  CHECK(f_sentiment_disagreement(make_pair(slept, neutral), kLex.polarity, kLex.markers) == 0.5);
  CHECK(f_sentiment_disagreement(make_pair(slept, slept), kLex.polarity, kLex.markers) == 0.0);
}

TEST_CASE("negation inside the clause flips polar words once") {
  // "غذا خوب است" / "غذا خوب نیست" and the concord form with هرگز.
  auto good = [](bool negated_verb, bool never) {
    std::vector<Token> t = {tok("غذا", PosTag::kNSingCom, 3, "nsubj"),
                            tok("خوب", PosTag::kAdj, 3, "acomp"),
                            tok(negated_verb ? "نیست" : "است", PosTag::kV, 0, "root",
                                negated_verb ? Polarity::kNeg : Polarity::kPos, NerTag::kO, "است")};
    if (never) t.push_back(tok("هرگز", PosTag::kAdv, 3, "advmod", Polarity::kNeg));
    return sent(std::move(t));
  };
  CHECK(sentence_sentiment(good(false, false), kLex.polarity, kLex.markers) == Approx(0.8));
  CHECK(sentence_sentiment(good(true, false), kLex.polarity, kLex.markers) == Approx(-0.8));
  CHECK(sentence_sentiment(good(true, true), kLex.polarity, kLex.markers) == Approx(-0.8));
  CHECK(f_sentiment_disagreement(make_pair(good(false, false), good(true, false)), kLex.polarity,
                                 kLex.markers) == 1.0);
  CHECK(effective_polarity(good(true, true), 3, kLex.markers) == Polarity::kNeg);
  CHECK(effective_polarity(good(false, false), 3, kLex.markers) == Polarity::kPos);
}

TEST_CASE("named-entity mismatch") {
  auto trip = [](const std::string& city, const std::string& day) {
    std::vector<Token> t = {tok("she", PosTag::kPro, 2, "nsubj"),
                            tok("went", PosTag::kV, 0, "root", Polarity::kPos),
                            tok(city, PosTag::kNSingCom, 2, "obl", Polarity::kNone, NerTag::kLoc)};
    if (!day.empty()) {
      t.push_back(tok(day, PosTag::kNSingCom, 2, "obl", Polarity::kNone, NerTag::kDat));
    }
    return sent(std::move(t));
  };
  CHECK(f_ne_mismatch(make_pair(trip("Paris", ""), trip("London", ""))) == 1.0);
  CHECK(f_ne_mismatch(make_pair(trip("Paris", "monday"), trip("Paris", "monday"))) == 0.0);
  CHECK(f_ne_mismatch(make_pair(trip("Paris", "monday"), trip("London", "monday"))) == 0.5);
  CHECK(f_ne_mismatch(make_pair(trip("Paris", ""), words({"x"}))) == 0.0);
}

TEST_CASE("length difference") {
  CHECK(f_length_difference(make_pair(length_n(5), length_n(5))) == 0.0);
  CHECK(f_length_difference(make_pair(length_n(4), length_n(8))) == 0.5);
  AnnotatedSentence with_punct = length_n(4);
  with_punct.tokens.push_back(tok(".", PosTag::kPunc, 1, "punct"));
  CHECK(f_length_difference(make_pair(with_punct, length_n(4))) == 0.0);
}

TEST_CASE("adjective contrast") {
  CHECK(f_adjective_contrast(make_pair(shirt("black"), shirt("blue")), kLex.antonyms) == 1.0);
  CHECK(f_adjective_contrast(make_pair(shirt("black"), shirt("black")), kLex.antonyms) == 0.0);
  CHECK(f_adjective_contrast(make_pair(predicative_soup("داغ"), predicative_soup("سرد")),
                             kLex.antonyms) == 1.0);
}

TEST_CASE("verb contrast") {
  CHECK(f_verb_contrast(make_pair(verbs({"رفت"}), verbs({"رفت"})), kLex.antonyms) == 0.0);
  CHECK(f_verb_contrast(make_pair(verbs({"won"}), verbs({"lost"})), kLex.antonyms) == 1.0);
  CHECK(f_verb_contrast(make_pair(verbs({"A", "B"}), verbs({"B", "C"})), kLex.antonyms) ==
        Approx(2.0 / 3.0).epsilon(1e-12));
  // A verb under a noun is off the root path, leaving an empty set on one side.
  auto embedded = sent({tok("N", PosTag::kNSingCom, 0, "root"), tok("won", PosTag::kV, 1, "acl")});
  CHECK(f_verb_contrast(make_pair(embedded, verbs({"lost"})), kLex.antonyms) == 1.0);
}

TEST_CASE("negation") {
  CHECK(f_negation(make_pair(ali_school(false), ali_school(true)), kLex.markers) == 1.0);
  CHECK(f_negation(make_pair(ali_school(false), ali_school(false)), kLex.markers) == 0.0);
  // "هرگز به تهران بر نمی‌گردم" vs "به تهران برگشتم".
  auto never = sent({tok("هرگز", PosTag::kAdv, 4, "advmod", Polarity::kNeg),
                     tok("به", PosTag::kPrep, 4, "prep"),
                     tok("تهران", PosTag::kNSingCom, 2, "pobj", Polarity::kNone, NerTag::kLoc),
                     tok("برنمی‌گردم", PosTag::kV, 0, "root", Polarity::kNeg, NerTag::kO, "برگشت")});
  auto back = sent({tok("به", PosTag::kPrep, 3, "prep"),
                    tok("تهران", PosTag::kNSingCom, 1, "pobj", Polarity::kNone, NerTag::kLoc),
                    tok("برگشتم", PosTag::kV, 0, "root", Polarity::kPos, NerTag::kO, "برگشت")});
  CHECK(f_negation(make_pair(never, back), kLex.markers) == 1.0);
  // A negative quantifier negates a positive-looking verb.
  auto nobody = sent({tok("هیچ‌کس", PosTag::kQuant, 2, "nsubj"),
                      tok("رفت", PosTag::kV, 0, "root", Polarity::kPos)});
  auto someone = sent({tok("علی", PosTag::kNSingCom, 2, "nsubj"),
                       tok("رفت", PosTag::kV, 0, "root", Polarity::kPos)});
  CHECK(f_negation(make_pair(nobody, someone), kLex.markers) == 1.0);
}

TEST_CASE("common words and cosine similarity") {
  auto abc = words({"a1", "b", "c"});
  auto bcde = words({"b", "c", "d", "e"});
  // The shared root verb "is" is a stopword, so only the nouns count.
  CHECK(f_common_words(make_pair(abc, abc), kLex.markers) == 1.0);
  CHECK(f_common_words(make_pair(words({"x"}), words({"y"})), kLex.markers) == 0.0);
  CHECK(f_common_words(make_pair(abc, bcde), kLex.markers) == Approx(2.0 / 3.0).epsilon(1e-12));
  CHECK(f_cosine_similarity(make_pair(abc, abc), kLex.markers) == 1.0);
  CHECK(f_cosine_similarity(make_pair(words({"x"}), words({"y"})), kLex.markers) == 0.0);
  CHECK(f_cosine_similarity(make_pair(words({"a1", "b"}), words({"b", "c"})), kLex.markers) ==
        Approx(0.5).epsilon(1e-12));
  CHECK(bag_cosine({{"a", 1}, {"b", 1}}, {{"b", 1}, {"c", 1}}) == Approx(0.5).epsilon(1e-12));
  CHECK(bag_cosine({}, {{"a", 1}}) == 0.0);
  // Sentences of stopwords only agree vacuously.
  auto only_stop = words({"the"});
  CHECK(f_common_words(make_pair(only_stop, only_stop), kLex.markers) == 1.0);
  CHECK(f_cosine_similarity(make_pair(only_stop, only_stop), kLex.markers) == 1.0);
}

TEST_CASE("srl mismatch") {
  // "water floats on oil" vs "oil is floating on water".
  auto floats = sent({tok("water", PosTag::kNSingCom, 2, "nsubj"),
                      tok("floats", PosTag::kV, 0, "root", Polarity::kPos),
                      tok("on", PosTag::kPrep, 2, "prep"), tok("oil", PosTag::kNSingCom, 3, "pobj")},
                     {{2, {{"A0", 1, 1}, {"A1", 3, 4}}}});
  auto floating = sent({tok("oil", PosTag::kNSingCom, 3, "nsubj"),
                        tok("is", PosTag::kV, 3, "aux", Polarity::kPos),
                        tok("floating", PosTag::kV, 0, "root", Polarity::kPos),
                        tok("on", PosTag::kPrep, 3, "prep"), tok("water", PosTag::kNSingCom, 4, "pobj")},
                       {{3, {{"A0", 1, 1}, {"A1", 4, 5}}}});
  CHECK(f_srl_mismatch(make_pair(floats, floating), kLex.markers) == 1.0);
  CHECK(f_srl_mismatch(make_pair(floats, floats), kLex.markers) == 0.0);

  auto when = [](const std::string& day) {
    return sent({tok("he", PosTag::kPro, 2, "nsubj"), tok("came", PosTag::kV, 0, "root", Polarity::kPos),
                 tok(day, PosTag::kAdv, 2, "advmod")},
                {{2, {{"A0", 1, 1}, {"TMP", 3, 3}}}});
  };
  CHECK(f_srl_mismatch(make_pair(when("yesterday"), when("yesterday")), kLex.markers) == 0.0);
  CHECK(f_srl_mismatch(make_pair(when("yesterday"), when("today")), kLex.markers) == 1.0);
  CHECK(f_srl_mismatch(make_pair(words({"x"}), words({"x"})), kLex.markers) == 0.0);
}

TEST_CASE("antonym in similar positions") {
  auto clothes = [](const std::string& adj) {
    return sent({tok("my", PosTag::kPro, 2, "poss"), tok("clothes", PosTag::kNPlur, 3, "nsubj"),
                 tok("are", PosTag::kV, 0, "root", Polarity::kPos),
                 tok(adj, PosTag::kAdj, 3, "acomp")});
  };
  CHECK(f_antonym(make_pair(clothes("wet"), clothes("dry")), kLex.antonyms) == 1.0);
  CHECK(f_antonym(make_pair(clothes("wet"), clothes("clean")), kLex.antonyms) == 0.0);
  auto hot_soup = sent({tok("hot", PosTag::kAdj, 2, "amod"), tok("soup", PosTag::kNSingCom, 0, "root")});
  auto cold_tea = sent({tok("tea", PosTag::kNSingCom, 0, "root"), tok("cold", PosTag::kAdj, 1, "acomp")});
  CHECK(f_antonym(make_pair(hot_soup, cold_tea), kLex.antonyms) == 0.5);
  // Different syntax, same SRL role.
  auto hot_srl = hot_soup;
  hot_srl.srl = {{2, {{"A1", 1, 1}}}};
  auto cold_srl = cold_tea;
  cold_srl.srl = {{1, {{"A1", 2, 2}}}};
  CHECK(f_antonym(make_pair(hot_srl, cold_srl), kLex.antonyms) == 1.0);
}

TEST_CASE("feature vector of a pair with itself and of the negation example") {
  FeatureVector self = extract_feature_vector(make_pair(ali_school(false), ali_school(false)), kLex);
  CHECK(self.sentiment_disagreement == 0.0);
  CHECK(self.ne_mismatch == 0.0);
  CHECK(self.length_difference == 0.0);
  CHECK(self.adjective_contrast == 0.0);
  CHECK(self.verb_contrast == 0.0);
  CHECK(self.negation == 0.0);
  CHECK(self.srl_mismatch == 0.0);
  CHECK(self.antonym == 0.0);
  CHECK(self.common_words == 1.0);
  CHECK(self.cosine_similarity == 1.0);
  FeatureVector neg = extract_feature_vector(make_pair(ali_school(false), ali_school(true)), kLex);
  CHECK(neg.negation == 1.0);
  CHECK(FeatureVector::from_values(neg.values()) == neg);
}

TEST_CASE("repeated verbs with mixed polarity do not negate a sentence against itself") {
  auto mixed = sent({tok("رفت", PosTag::kV, 0, "root", Polarity::kPos),
                     tok("نرفت", PosTag::kV, 1, "conj", Polarity::kNeg, NerTag::kO, "رفت")});
  CHECK(f_negation(make_pair(mixed, mixed), kLex.markers) == 0.0);
  CHECK(f_negation(make_pair(mixed, verbs({"رفت"})), kLex.markers) == 1.0);
}

TEST_CASE("clause heads follow the nearest verb ancestor") {
  auto s = ali_school(false);
  auto heads = clause_heads(s);
  CHECK(heads[1] == 4);
  CHECK(heads[3] == 4);
  CHECK(heads[4] == 4);
  auto verbless = words({});
  verbless.tokens[0].pos = PosTag::kNSingCom;
  CHECK(clause_heads(verbless)[1] == 0);
}

TEST_CASE("feature invariants hold on random pairs") {
  RandomPairs r(2024);
  const Lexicons lex = synthetic_lexicons();
  for (int i = 0; i < 1500; ++i) {
    SentencePair p = r.pair();
    FeatureVector f = extract_feature_vector(p, lex);
    FeatureVector g = extract_feature_vector(swapped(p), lex);
    for (double v : f.values()) {
      CHECK(v >= 0.0);
      CHECK(v <= 1.0);
    }
    CHECK(f == g);
    FeatureVector self = extract_feature_vector(make_pair(p.premise, p.premise), lex);
    CHECK(self.sentiment_disagreement == 0.0);
    CHECK(self.ne_mismatch == 0.0);
    CHECK(self.length_difference == 0.0);
    CHECK(self.negation == 0.0);
    CHECK(self.srl_mismatch == 0.0);
    CHECK(self.common_words == 1.0);
    CHECK(self.cosine_similarity == 1.0);
  }
}

TEST_CASE("bag cosine agrees with the brute-force oracle") {
  RandomPairs r(77);
  for (int i = 0; i < 2000; ++i) {
    LemmaBag a, b;
    int na = r.uniform(0, 8), nb = r.uniform(0, 8);
    for (int k = 0; k < na; ++k) a["w" + std::to_string(r.uniform(0, 10))] += r.uniform(1, 5);
    for (int k = 0; k < nb; ++k) b["w" + std::to_string(r.uniform(0, 10))] += r.uniform(1, 5);
    CHECK(std::abs(bag_cosine(a, b) - oracle::cosine(a, b)) <= 1e-9);
    CHECK(bag_cosine(a, b) == bag_cosine(b, a));
    if (!a.empty()) CHECK(bag_cosine(a, a) == 1.0);
  }
}
