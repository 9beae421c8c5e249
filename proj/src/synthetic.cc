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

#include "contra/synthetic.h"

#include <algorithm>
#include <array>
#include <cstdio>
#include <functional>
#include <random>

namespace contra {
namespace {

using Rng = std::mt19937_64;

// A template word; head is a 1-based index within its sentence.
struct W {
  std::string form;
  std::string lemma;
  PosTag pos;
  int head;
  std::string deprel;
  Polarity polarity = Polarity::kNone;
  NerTag ner = NerTag::kO;
};

struct Verb {
  std::string lemma;
  std::string negated;  // negated surface form
};

struct Noun {
  std::string lemma;
  NerTag ner = NerTag::kO;
};

// Closed vocabulary. Glosses: names; places (school, market, park, library,
// university, hospital, party).
const std::vector<Noun> kNames = {{"علی", NerTag::kPer},  {"مریم", NerTag::kPer},
                                  {"رضا", NerTag::kPer},  {"سارا", NerTag::kPer},
                                  {"حسن", NerTag::kPer},  {"زهرا", NerTag::kPer},
                                  {"امید", NerTag::kPer}, {"نرگس", NerTag::kPer}};
const std::vector<Noun> kPlaces = {{"مدرسه"},    {"بازار"},   {"پارک"},   {"کتابخانه"},
                                   {"دانشگاه"}, {"بیمارستان"}, {"مهمانی"}};
const std::vector<Noun> kCities = {{"تهران", NerTag::kLoc},  {"شیراز", NerTag::kLoc},
                                   {"اصفهان", NerTag::kLoc}, {"تبریز", NerTag::kLoc},
                                   {"مشهد", NerTag::kLoc},   {"پاریس", NerTag::kLoc},
                                   {"لندن", NerTag::kLoc}};
// went, came, arrived, returned
const std::vector<Verb> kMotionVerbs = {
    {"رفت", "نرفت"}, {"آمد", "نیامد"}, {"رسید", "نرسید"}, {"برگشت", "برنگشت"}};
// bought, read, saw, wrote
const std::vector<Verb> kTransitiveVerbs = {
    {"خرید", "نخرید"}, {"خواند", "نخواند"}, {"دید", "ندید"}, {"نوشت", "ننوشت"}};
// Objects that fit each transitive verb, in kTransitiveVerbs order.
const std::vector<std::vector<Noun>> kObjectsOf = {
    {{"کتاب"}, {"روزنامه"}, {"خانه"}, {"ماشین"}},
    {{"کتاب"}, {"نامه"}, {"روزنامه"}},
    {{"کتاب"}, {"نامه"}, {"روزنامه"}, {"خانه"}, {"ماشین"}},
    {{"کتاب"}, {"نامه"}}};
// bought, saw: the verbs that fit any attributive object.
const std::vector<Verb> kAttributeVerbs = {{"خرید", "نخرید"}, {"دید", "ندید"}};

// Numerals 2..7 and 10; crowd nouns (girl, boy, student, worker, teacher);
// yards and streets; sat, were, stood, laughed.
const std::vector<std::string> kNumerals = {"دو", "سه", "چهار", "پنج", "شش", "هفت", "ده"};
const std::vector<std::string> kCrowds = {"دختر", "پسر", "دانشجو", "کارگر", "معلم"};
const std::vector<std::string> kYards = {"خیابان", "کلاس", "حیاط", "پارک"};
const std::vector<std::string> kStatives = {"نشستند", "بودند", "ایستادند", "خندیدند"};

// hot/cold, warm/cold, big/small, tall/short, good/bad, clean/dirty,
// happy/sad, cheap/expensive, bright/dark, wet/dry, full/empty,
// strong/weak, beautiful/ugly.
// Constant-initialized: synthetic_vocabulary() may run during another
// translation unit's static initialization.
constexpr std::array<std::pair<const char*, const char*>, 13> kAntonyms = {{
    {"داغ", "سرد"},     {"گرم", "سرد"},     {"بزرگ", "کوچک"},   {"بلند", "کوتاه"},
    {"خوب", "بد"},      {"تمیز", "کثیف"},   {"خوشحال", "ناراحت"}, {"ارزان", "گران"},
    {"روشن", "تاریک"},  {"خیس", "خشک"},     {"پر", "خالی"},     {"قوی", "ضعیف"},
    {"زیبا", "زشت"}}};
// Non-antonym adjectives for neutral pairs: new, old(aged), red, quiet, round.
const std::vector<std::string> kPlainAdjectives = {"تازه", "قدیمی", "قرمز", "آرام", "گرد"};

// soup, weather, room, clothes, tea, water
const std::vector<std::string> kPredicateNouns = {"سوپ", "هوا", "اتاق", "لباس", "چای", "آب"};
// house, car, clothes, book, room
const std::vector<std::string> kAttributeNouns = {"خانه", "ماشین", "لباس", "کتاب", "اتاق"};

// water, oil, wood, ice
const std::vector<std::string> kFloaters = {"آب", "روغن", "چوب", "یخ"};
// bigger, older, taller
const std::vector<std::string> kComparatives = {"بزرگتر", "قدیمی‌تر", "بلندتر"};
// cat, mouse, dog, police, thief
const std::vector<std::string> kActors = {"گربه", "موش", "سگ", "پلیس", "دزد"};
// caught, chased, bit
const std::vector<std::string> kActorVerbs = {"گرفت", "تعقیب‌کرد", "گزید"};

constexpr const char* kNobody = "هیچ‌کس";
constexpr const char* kEverybody = "همه";
constexpr const char* kNever = "هرگز";
constexpr const char* kYesterday = "دیروز";

std::size_t below(Rng& rng, std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

template <typename C>
const auto& pick(Rng& rng, const C& items) {
  return items[below(rng, items.size())];
}

// Two distinct elements.
template <typename T>
std::pair<T, T> pick_two(Rng& rng, const std::vector<T>& items) {
  std::size_t a = below(rng, items.size());
  std::size_t b = below(rng, items.size() - 1);
  if (b >= a) ++b;
  return {items[a], items[b]};
}

// A transitive verb with an object it fits.
std::pair<Verb, Noun> pick_action(Rng& rng) {
  std::size_t v = below(rng, kTransitiveVerbs.size());
  return {kTransitiveVerbs[v], pick(rng, kObjectsOf[v])};
}

bool coin(Rng& rng) { return below(rng, 2) == 1; }

Polarity pol(bool negative) { return negative ? Polarity::kNeg : Polarity::kPos; }

W verb_word(const Verb& v, bool negative, int head, const char* deprel = "root") {
  return {negative ? v.negated : v.lemma, v.lemma, PosTag::kV, head, deprel, pol(negative)};
}

W noun_word(const Noun& n, int head, const char* deprel) {
  return {n.lemma, n.lemma, PosTag::kNSingCom, head, deprel, Polarity::kNone, n.ner};
}

W plain(const std::string& lemma, PosTag pos, int head, const char* deprel) {
  return {lemma, lemma, pos, head, deprel};
}

AnnotatedSentence sentence(std::vector<W> words, std::vector<SrlFrame> srl) {
  AnnotatedSentence s;
  int root = 0;
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (words[i].head == 0) root = static_cast<int>(i) + 1;
  }
  words.push_back({".", ".", PosTag::kPunc, root, "punct"});
  for (const W& w : words) {
    if (!s.text.empty()) s.text += ' ';
    s.text += w.form;
    s.tokens.push_back({w.form, w.lemma, w.pos, w.polarity, w.ner, w.head, w.deprel});
  }
  s.srl = std::move(srl);
  return s;
}

SrlFrame frame(int predicate, std::vector<SrlArg> args) { return {predicate, std::move(args)}; }

// "<subject> به <place> <verb>" : subject went/came to place.
AnnotatedSentence motion(const Noun& subject, const Noun& place, const Verb& v, bool negative) {
  return sentence({noun_word(subject, 4, "nsubj"), plain("به", PosTag::kPrep, 4, "prep"),
                   noun_word(place, 2, "pobj"), verb_word(v, negative, 0)},
                  {frame(4, {{"A0", 1, 1}, {"LOC", 2, 3}})});
}

// "هیچ‌کس به <place> <negated verb>" : nobody went to place.
AnnotatedSentence nobody_motion(const Noun& place, const Verb& v) {
  return sentence({{kNobody, kNobody, PosTag::kQuant, 4, "nsubj", Polarity::kNeg},
                   plain("به", PosTag::kPrep, 4, "prep"), noun_word(place, 2, "pobj"),
                   verb_word(v, true, 0)},
                  {frame(4, {{"A0", 1, 1}, {"LOC", 2, 3}})});
}

// "همه به <place> <verb>" : everybody went to place.
AnnotatedSentence everybody_motion(const Noun& place, const Verb& v) {
  return sentence({plain(kEverybody, PosTag::kQuant, 4, "nsubj"),
                   plain("به", PosTag::kPrep, 4, "prep"), noun_word(place, 2, "pobj"),
                   verb_word(v, false, 0)},
                  {frame(4, {{"A0", 1, 1}, {"LOC", 2, 3}})});
}

// "<subject> هرگز به <place> <negated verb>" : subject never went to place.
AnnotatedSentence never_motion(const Noun& subject, const Noun& place, const Verb& v) {
  return sentence({noun_word(subject, 5, "nsubj"),
                   {kNever, kNever, PosTag::kAdv, 5, "advmod", Polarity::kNeg},
                   plain("به", PosTag::kPrep, 5, "prep"), noun_word(place, 3, "pobj"),
                   verb_word(v, true, 0)},
                  {frame(5, {{"A0", 1, 1}, {"LOC", 3, 4}})});
}

// "<subject> <object> را <verb>" : subject bought/read/... the object.
AnnotatedSentence transitive(const Noun& subject, const Noun& object, const Verb& v,
                             bool negative) {
  return sentence({noun_word(subject, 4, "nsubj"), noun_word(object, 4, "obj"),
                   plain("را", PosTag::kPrep, 2, "case"), verb_word(v, negative, 0)},
                  {frame(4, {{"A0", 1, 1}, {"A1", 2, 3}})});
}

// "<numeral> <noun> در <yard> <verb>" : three girls sat in the street.
AnnotatedSentence counted(const std::string& numeral, const std::string& noun,
                          const std::string& yard, const std::string& verb) {
  return sentence({{numeral, numeral, PosTag::kNum, 2, "num", Polarity::kNone, NerTag::kNum},
                   plain(noun, PosTag::kNSingCom, 5, "nsubj"), plain("در", PosTag::kPrep, 5, "prep"),
                   plain(yard, PosTag::kNSingCom, 3, "pobj"),
                   {verb, verb, PosTag::kV, 0, "root", Polarity::kPos}},
                  {frame(5, {{"A0", 1, 2}, {"LOC", 3, 4}})});
}

// "<noun> <adjective> است" : the soup is hot.
AnnotatedSentence predicative(const std::string& noun, const std::string& adjective) {
  return sentence({plain(noun, PosTag::kNSingCom, 3, "nsubj"),
                   plain(adjective, PosTag::kAdj, 3, "acomp"),
                   {"است", "است", PosTag::kV, 0, "root", Polarity::kPos}},
                  {frame(3, {{"A1", 1, 1}})});
}

// "<name> <noun> <adjective> را <verb>" : Ali bought the big house.
AnnotatedSentence attributive(const Noun& name, const std::string& noun,
                              const std::string& adjective, const Verb& v) {
  return sentence({noun_word(name, 5, "nsubj"), plain(noun, PosTag::kNSingCom, 5, "obj"),
                   plain(adjective, PosTag::kAdj, 2, "amod"), plain("را", PosTag::kPrep, 2, "case"),
                   verb_word(v, false, 0)},
                  {frame(5, {{"A0", 1, 1}, {"A1", 2, 4}})});
}

// "<x> روی <y> شناور است" : x floats on y.
AnnotatedSentence floats(const std::string& x, const std::string& y) {
  return sentence({plain(x, PosTag::kNSingCom, 5, "nsubj"), plain("روی", PosTag::kPrep, 5, "prep"),
                   plain(y, PosTag::kNSingCom, 2, "pobj"), plain("شناور", PosTag::kAdj, 5, "acomp"),
                   {"است", "است", PosTag::kV, 0, "root", Polarity::kPos}},
                  {frame(5, {{"A0", 1, 1}, {"A1", 2, 3}})});
}

// "<x> <comparative> از <y> است" : x is bigger than y.
AnnotatedSentence compared(const Noun& x, const std::string& comparative, const Noun& y) {
  return sentence({noun_word(x, 5, "nsubj"), plain(comparative, PosTag::kAdj, 5, "acomp"),
                   plain("از", PosTag::kPrep, 2, "prep"), noun_word(y, 3, "pobj"),
                   {"است", "است", PosTag::kV, 0, "root", Polarity::kPos}},
                  {frame(5, {{"A0", 1, 1}, {"A1", 3, 4}})});
}

// "<x> <y> را <verb>" : the cat caught the mouse.
AnnotatedSentence acts_on(const std::string& x, const std::string& y, const std::string& verb) {
  return sentence({plain(x, PosTag::kNSingCom, 4, "nsubj"), plain(y, PosTag::kNSingCom, 4, "obj"),
                   plain("را", PosTag::kPrep, 2, "case"),
                   {verb, verb, PosTag::kV, 0, "root", Polarity::kPos}},
                  {frame(4, {{"A0", 1, 1}, {"A1", 2, 3}})});
}

// "<name> [دیروز] به <city> رفت" : name went to city (yesterday).
AnnotatedSentence trip(const Noun& name, const Noun& city, bool yesterday) {
  const Verb& went = kMotionVerbs[0];
  if (!yesterday) return motion(name, city, went, false);
  return sentence({noun_word(name, 5, "nsubj"),
                   {kYesterday, kYesterday, PosTag::kAdv, 5, "advmod", Polarity::kNone, NerTag::kTim},
                   plain("به", PosTag::kPrep, 5, "prep"), noun_word(city, 3, "pobj"),
                   verb_word(went, false, 0)},
                  {frame(5, {{"A0", 1, 1}, {"TMP", 2, 2}, {"LOC", 3, 4}})});
}

// "<name> در <city> متولد شد" : name was born in city.
AnnotatedSentence born(const Noun& name, const Noun& city) {
  return sentence({noun_word(name, 5, "nsubj"), plain("در", PosTag::kPrep, 5, "prep"),
                   noun_word(city, 2, "pobj"), plain("متولد", PosTag::kAdj, 5, "acomp"),
                   {"شد", "شد", PosTag::kV, 0, "root", Polarity::kPos}},
                  {frame(5, {{"A0", 1, 1}, {"LOC", 2, 3}})});
}

struct Sentences {
  AnnotatedSentence premise;
  AnnotatedSentence hypothesis;
  GoldLabel gold = GoldLabel::kContradiction;
};

Sentences maybe_swap(Rng& rng, AnnotatedSentence a, AnnotatedSentence b) {
  if (coin(rng)) std::swap(a, b);
  return {std::move(a), std::move(b)};
}

Sentences negation_pair(Rng& rng) {
  switch (below(rng, 4)) {
    case 0: {
      const Noun& name = pick(rng, kNames);
      const Noun& place = pick(rng, kPlaces);
      const Verb& v = pick(rng, kMotionVerbs);
      return maybe_swap(rng, motion(name, place, v, false), motion(name, place, v, true));
    }
    case 1: {
      const Noun& name = pick(rng, kNames);
      auto [v, object] = pick_action(rng);
      return maybe_swap(rng, transitive(name, object, v, false),
                        transitive(name, object, v, true));
    }
    case 2: {
      const Noun& place = pick(rng, kPlaces);
      const Verb& v = pick(rng, kMotionVerbs);
      AnnotatedSentence positive = coin(rng) ? everybody_motion(place, v)
                                             : motion(pick(rng, kNames), place, v, false);
      return maybe_swap(rng, nobody_motion(place, v), std::move(positive));
    }
    default: {
      const Noun& name = pick(rng, kNames);
      const Noun& place = pick(rng, kPlaces);
      const Verb& v = pick(rng, kMotionVerbs);
      return maybe_swap(rng, never_motion(name, place, v), motion(name, place, v, false));
    }
  }
}

Sentences numeric_pair(Rng& rng) {
  auto [n1, n2] = pick_two(rng, kNumerals);
  const std::string& noun = pick(rng, kCrowds);
  const std::string& yard = pick(rng, kYards);
  const std::string& v1 = pick(rng, kStatives);
  const std::string& v2 = coin(rng) ? v1 : pick(rng, kStatives);
  return {counted(n1, noun, yard, v1), counted(n2, noun, yard, v2)};
}

Sentences antonym_pair(Rng& rng) {
  std::pair<std::string, std::string> ab = pick(rng, kAntonyms);
  auto& [a, b] = ab;
  if (coin(rng)) std::swap(a, b);
  if (coin(rng)) {
    const std::string& noun = pick(rng, kPredicateNouns);
    return {predicative(noun, a), predicative(noun, b)};
  }
  const Noun& name = pick(rng, kNames);
  const std::string& noun = pick(rng, kAttributeNouns);
  const Verb& v = pick(rng, kAttributeVerbs);
  return {attributive(name, noun, a, v), attributive(name, noun, b, v)};
}

Sentences structural_pair(Rng& rng) {
  switch (below(rng, 3)) {
    case 0: {
      auto [x, y] = pick_two(rng, kFloaters);
      return {floats(x, y), floats(y, x)};
    }
    case 1: {
      auto [x, y] = coin(rng) ? pick_two(rng, kCities) : pick_two(rng, kNames);
      const std::string& comparative = pick(rng, kComparatives);
      return {compared(x, comparative, y), compared(y, comparative, x)};
    }
    default: {
      auto [x, y] = pick_two(rng, kActors);
      const std::string& verb = pick(rng, kActorVerbs);
      return {acts_on(x, y, verb), acts_on(y, x, verb)};
    }
  }
}

Sentences others_pair(Rng& rng) {
  const Noun& name = pick(rng, kNames);
  auto [c1, c2] = pick_two(rng, kCities);
  if (coin(rng)) return {trip(name, c1, true), trip(name, c2, true)};
  return {born(name, c1), born(name, c2)};
}

Sentences noise_pair(Rng& rng) {
  Sentences s;
  s.gold = GoldLabel::kNeutral;
  switch (below(rng, 7)) {
    case 0: {  // different events, same person
      const Noun& name = pick(rng, kNames);
      s.premise = motion(name, pick(rng, kPlaces), pick(rng, kMotionVerbs), false);
      auto [v, object] = pick_action(rng);
      s.hypothesis = transitive(name, object, v, false);
      break;
    }
    case 1: {  // same verb and polarity, different places
      const Noun& name = pick(rng, kNames);
      auto [p1, p2] = pick_two(rng, kPlaces);
      const Verb& v = pick(rng, kMotionVerbs);
      bool negative = coin(rng);
      s.premise = motion(name, p1, v, negative);
      s.hypothesis = motion(name, p2, v, negative);
      break;
    }
    case 2: {  // negative quantifier on both sides, different events
      auto [p1, p2] = pick_two(rng, kPlaces);
      auto [v1, v2] = pick_two(rng, kMotionVerbs);
      s.premise = nobody_motion(p1, v1);
      s.hypothesis = nobody_motion(p2, v2);
      break;
    }
    case 3: {  // counted crowds that do not conflict
      const std::string& noun = pick(rng, kCrowds);
      auto [y1, y2] = pick_two(rng, kYards);
      if (coin(rng)) {
        const std::string& n = pick(rng, kNumerals);
        s.premise = counted(n, noun, y1, pick(rng, kStatives));
        s.hypothesis = counted(n, noun, y2, pick(rng, kStatives));
      } else {
        auto [n1, n2] = pick_two(rng, kNumerals);
        auto [c1, c2] = pick_two(rng, kCrowds);
        s.premise = counted(n1, c1, y1, pick(rng, kStatives));
        s.hypothesis = counted(n2, c2, y2, pick(rng, kStatives));
      }
      break;
    }
    case 4: {  // compatible adjectives
      const std::string& noun = pick(rng, kPredicateNouns);
      auto [a1, a2] = pick_two(rng, kPlainAdjectives);
      s.premise = predicative(noun, a1);
      s.hypothesis = predicative(noun, a2);
      break;
    }
    case 5: {  // same agent, different patient
      std::vector<std::string> actors = kActors;
      std::shuffle(actors.begin(), actors.end(), rng);
      const std::string& verb = pick(rng, kActorVerbs);
      s.premise = acts_on(actors[0], actors[1], verb);
      s.hypothesis = acts_on(actors[0], actors[2], verb);
      break;
    }
    default: {  // dropping a time adjunct is entailed
      const Noun& name = pick(rng, kNames);
      const Noun& city = pick(rng, kCities);
      s.premise = trip(name, city, true);
      s.hypothesis = trip(name, city, false);
      s.gold = GoldLabel::kEntailment;
      break;
    }
  }
  return s;
}

std::string make_id(const char* prefix, int n) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%s-%04d", prefix, n);
  return buf;
}

}  // namespace

Corpus generate_synthetic_corpus(const SyntheticSpec& spec, std::uint64_t seed) {
  Rng rng(seed);
  Corpus corpus;
  corpus.provenance = "synthetic:seed=" + std::to_string(seed);
  struct Family {
    Category category;
    const char* prefix;
    std::function<Sentences(Rng&)> make;
  };
  const Family families[] = {{Category::kNegation, "neg", negation_pair},
                             {Category::kNumeric, "num", numeric_pair},
                             {Category::kAntonym, "ant", antonym_pair},
                             {Category::kStructural, "str", structural_pair},
                             {Category::kOthers, "oth", others_pair}};
  for (const Family& f : families) {
    for (int i = 1; i <= spec[f.category]; ++i) {
      Sentences s = f.make(rng);
      corpus.pairs.push_back({make_id(f.prefix, i), std::move(s.premise),
                              std::move(s.hypothesis), GoldLabel::kContradiction, f.category});
    }
  }
  for (int i = 1; i <= spec.noise; ++i) {
    Sentences s = noise_pair(rng);
    corpus.pairs.push_back({make_id("noise", i), std::move(s.premise), std::move(s.hypothesis),
                            s.gold, std::nullopt});
  }
  std::shuffle(corpus.pairs.begin(), corpus.pairs.end(), rng);
  return corpus;
}

const SyntheticVocabulary& synthetic_vocabulary() {
  static const SyntheticVocabulary vocab = [] {
    SyntheticVocabulary v;
    v.antonyms.assign(kAntonyms.begin(), kAntonyms.end());
    v.polarity = {
        {"خوب", {Sentiment::kPositive, 0.8}},   {"بد", {Sentiment::kNegative, 0.8}},
        {"خوشحال", {Sentiment::kPositive, 0.7}}, {"ناراحت", {Sentiment::kNegative, 0.7}},
        {"زیبا", {Sentiment::kPositive, 0.6}},  {"زشت", {Sentiment::kNegative, 0.6}},
        {"تمیز", {Sentiment::kPositive, 0.4}},  {"کثیف", {Sentiment::kNegative, 0.5}},
        {"قوی", {Sentiment::kPositive, 0.3}},   {"ضعیف", {Sentiment::kNegative, 0.3}},
    };
    v.stopwords = {"به", "در", "از", "را", "روی", "و", "که", "با", "این", "آن"};
    v.negative_quantifiers = {kNobody, "هیچ", "هیچ‌چیز"};
    v.negative_adverbs = {kNever, "هیچ‌وقت"};
    return v;
  }();
  return vocab;
}

Lexicons synthetic_lexicons() {
  const SyntheticVocabulary& v = synthetic_vocabulary();
  Lexicons lex;
  for (const auto& [a, b] : v.antonyms) lex.antonyms.add(a, b);
  for (const auto& [lemma, entry] : v.polarity) lex.polarity.add(lemma, entry);
  lex.markers.stopwords.insert(v.stopwords.begin(), v.stopwords.end());
  lex.markers.negative_quantifiers.insert(v.negative_quantifiers.begin(),
                                          v.negative_quantifiers.end());
  lex.markers.negative_adverbs.insert(v.negative_adverbs.begin(), v.negative_adverbs.end());
  return lex;
}

}  // namespace contra
