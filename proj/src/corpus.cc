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

#include "contra/corpus.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <memory>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <unordered_set>

#include <unicode/normalizer2.h>
#include <unicode/unistr.h>

#include "contra/error.h"
#include "json.hpp"

namespace contra {
namespace {

using nlohmann::json;

constexpr std::pair<PosTag, std::string_view> kPosNames[] = {
    {PosTag::kV, "V"},          {PosTag::kNSingCom, "N-SING-COM"},
    {PosTag::kNPlur, "N-PLUR"}, {PosTag::kAdj, "ADJ"},
    {PosTag::kAdv, "ADV"},      {PosTag::kNum, "NUM"},
    {PosTag::kQuant, "QUANT"},  {PosTag::kPro, "PRO"},
    {PosTag::kPrep, "PREP"},    {PosTag::kConj, "CONJ"},
    {PosTag::kPunc, "PUNC"},    {PosTag::kO, "O"},
};

constexpr std::pair<Polarity, std::string_view> kPolarityNames[] = {
    {Polarity::kPos, "POS"}, {Polarity::kNeg, "NEG"}, {Polarity::kNone, "NONE"}};

constexpr std::pair<NerTag, std::string_view> kNerNames[] = {
    {NerTag::kPer, "PER"}, {NerTag::kLoc, "LOC"}, {NerTag::kOrg, "ORG"},
    {NerTag::kDat, "DAT"}, {NerTag::kTim, "TIM"}, {NerTag::kNum, "NUM"},
    {NerTag::kO, "O"}};

constexpr std::pair<GoldLabel, std::string_view> kGoldNames[] = {
    {GoldLabel::kContradiction, "contradiction"},
    {GoldLabel::kEntailment, "entailment"},
    {GoldLabel::kNeutral, "neutral"}};

constexpr std::pair<Category, std::string_view> kCategoryNames[] = {
    {Category::kNegation, "NEGATION"},     {Category::kNumeric, "NUMERIC"},
    {Category::kAntonym, "ANTONYM"},       {Category::kStructural, "STRUCTURAL"},
    {Category::kOthers, "OTHERS"}};

template <typename E, std::size_t N>
std::string_view name_of(const std::pair<E, std::string_view> (&table)[N],
                         E value) {
  for (const auto& [v, name] : table) {
    if (v == value) return name;
  }
  return "?";
}

template <typename E, std::size_t N>
std::optional<E> value_of(const std::pair<E, std::string_view> (&table)[N],
                          std::string_view name) {
  for (const auto& [v, n] : table) {
    if (n == name) return v;
  }
  return std::nullopt;
}

std::string upper(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::toupper(c); });
  return out;
}

// Deprels and roles become part of tuple encodings, so they may not contain
// the encoding delimiters.
bool is_label_safe(std::string_view s) {
  if (s.empty()) return false;
  return std::none_of(s.begin(), s.end(), [](char c) {
    return c == '(' || c == ')' || c == ',' || c == ' ' || c == '\t' ||
           c == '\n' || c == '\r';
  });
}

[[noreturn]] void fail(std::size_t line, std::string reason) {
  throw MalformedRecord(line, std::move(reason));
}

void check_keys(const json& object, std::initializer_list<std::string_view> known,
                std::string_view where, std::size_t line,
                const LoadOptions& options) {
  for (const auto& [key, _] : object.items()) {
    if (std::find(known.begin(), known.end(), key) != known.end()) continue;
    std::string message =
        "unknown field '" + key + "' in " + std::string(where);
    if (options.strict) fail(line, message);
    std::string full = "line " + std::to_string(line) + ": " + message;
    if (options.warn) {
      options.warn(full);
    } else {
      std::cerr << "warning: " << full << "\n";
    }
  }
}

const json& require(const json& object, const char* key, std::size_t line,
                    std::string_view where) {
  auto it = object.find(key);
  if (it == object.end()) {
    fail(line, "missing field '" + std::string(key) + "' in " +
                   std::string(where));
  }
  return *it;
}

std::string require_string(const json& object, const char* key,
                           std::size_t line, std::string_view where) {
  const json& v = require(object, key, line, where);
  if (!v.is_string()) {
    fail(line, "field '" + std::string(key) + "' must be a string");
  }
  return v.get<std::string>();
}

int require_int(const json& v, const char* what, std::size_t line) {
  if (!v.is_number_integer()) {
    fail(line, std::string(what) + " must be an integer");
  }
  return v.get<int>();
}

Token parse_token(const json& j, std::size_t line, const LoadOptions& options) {
  if (!j.is_object()) fail(line, "token must be an object");
  check_keys(j, {"form", "lemma", "pos", "polarity", "ner", "head", "deprel"},
             "token", line, options);
  Token t;
  t.form = normalize_nfc(require_string(j, "form", line, "token"));
  t.lemma = normalize_nfc(require_string(j, "lemma", line, "token"));
  std::string pos = require_string(j, "pos", line, "token");
  auto tag = parse_pos_tag(pos);
  if (!tag) fail(line, "unknown POS tag '" + pos + "'");
  t.pos = *tag;
  t.head = require_int(require(j, "head", line, "token"), "head", line);
  t.deprel = require_string(j, "deprel", line, "token");
  if (!is_label_safe(t.deprel)) fail(line, "invalid deprel '" + t.deprel + "'");
  if (auto it = j.find("ner"); it != j.end() && !it->is_null()) {
    if (!it->is_string()) fail(line, "ner must be a string");
    auto ner = parse_ner_tag(it->get<std::string>());
    if (!ner) fail(line, "unknown NER tag '" + it->get<std::string>() + "'");
    t.ner = *ner;
  }
  if (auto it = j.find("polarity"); it != j.end() && !it->is_null()) {
    if (!it->is_string()) fail(line, "polarity must be a string");
    auto polarity = parse_polarity(it->get<std::string>());
    if (!polarity) {
      fail(line, "unknown polarity '" + it->get<std::string>() + "'");
    }
    t.polarity = *polarity;
  } else {
    t.polarity = infer_polarity(t);
  }
  return t;
}

AnnotatedSentence parse_sentence(const json& j, std::size_t line,
                                 const LoadOptions& options) {
  if (!j.is_object()) fail(line, "sentence must be an object");
  check_keys(j, {"text", "tokens", "srl"}, "sentence", line, options);
  AnnotatedSentence s;
  s.text = normalize_nfc(require_string(j, "text", line, "sentence"));
  const json& tokens = require(j, "tokens", line, "sentence");
  if (!tokens.is_array()) fail(line, "tokens must be an array");
  for (const auto& tj : tokens) s.tokens.push_back(parse_token(tj, line, options));
  if (auto it = j.find("srl"); it != j.end() && !it->is_null()) {
    if (!it->is_array()) fail(line, "srl must be an array");
    for (const auto& fj : *it) {
      if (!fj.is_object()) fail(line, "srl frame must be an object");
      check_keys(fj, {"predicate", "args"}, "srl frame", line, options);
      SrlFrame frame;
      frame.predicate =
          require_int(require(fj, "predicate", line, "srl frame"), "predicate", line);
      const json& args = require(fj, "args", line, "srl frame");
      if (!args.is_array()) fail(line, "srl args must be an array");
      for (const auto& aj : args) {
        if (!aj.is_object()) fail(line, "srl argument must be an object");
        check_keys(aj, {"role", "span"}, "srl argument", line, options);
        SrlArg arg;
        arg.role = require_string(aj, "role", line, "srl argument");
        const json& span = require(aj, "span", line, "srl argument");
        if (!span.is_array() || span.size() != 2) {
          fail(line, "srl span must be a [start, end] pair");
        }
        arg.start = require_int(span[0], "span start", line);
        arg.end = require_int(span[1], "span end", line);
        frame.args.push_back(std::move(arg));
      }
      s.srl.push_back(std::move(frame));
    }
  }
  return s;
}

json sentence_to_json(const AnnotatedSentence& s) {
  json tokens = json::array();
  for (const Token& t : s.tokens) {
    json tj = json::object();
    tj["form"] = t.form;
    tj["lemma"] = t.lemma;
    tj["pos"] = to_string(t.pos);
    tj["polarity"] = to_string(t.polarity);
    tj["ner"] = to_string(t.ner);
    tj["head"] = t.head;
    tj["deprel"] = t.deprel;
    tokens.push_back(std::move(tj));
  }
  json srl = json::array();
  for (const SrlFrame& f : s.srl) {
    json args = json::array();
    for (const SrlArg& a : f.args) {
      args.push_back({{"role", a.role}, {"span", {a.start, a.end}}});
    }
    srl.push_back({{"predicate", f.predicate}, {"args", std::move(args)}});
  }
  json out = json::object();
  out["text"] = s.text;
  out["tokens"] = std::move(tokens);
  out["srl"] = std::move(srl);
  return out;
}

bool is_blank(std::string_view line) {
  return std::all_of(line.begin(), line.end(),
                     [](unsigned char c) { return std::isspace(c); });
}

}  // namespace

std::string_view to_string(PosTag tag) { return name_of(kPosNames, tag); }
std::string_view to_string(Polarity p) { return name_of(kPolarityNames, p); }
std::string_view to_string(NerTag tag) { return name_of(kNerNames, tag); }
std::string_view to_string(GoldLabel label) { return name_of(kGoldNames, label); }
std::string_view to_string(Category c) { return name_of(kCategoryNames, c); }

std::optional<PosTag> parse_pos_tag(std::string_view s) {
  return value_of(kPosNames, s);
}
std::optional<Polarity> parse_polarity(std::string_view s) {
  return value_of(kPolarityNames, s);
}
std::optional<NerTag> parse_ner_tag(std::string_view s) {
  return value_of(kNerNames, s);
}
std::optional<GoldLabel> parse_gold_label(std::string_view s) {
  return value_of(kGoldNames, s);
}
std::optional<Category> parse_category(std::string_view s) {
  return value_of(kCategoryNames, std::string_view(upper(s)));
}

std::string normalize_nfc(std::string_view utf8) {
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2* nfc = icu::Normalizer2::getNFCInstance(status);
  if (U_FAILURE(status)) return std::string(utf8);
  icu::UnicodeString input = icu::UnicodeString::fromUTF8(
      icu::StringPiece(utf8.data(), static_cast<int32_t>(utf8.size())));
  if (nfc->isNormalized(input, status) && U_SUCCESS(status)) {
    return std::string(utf8);
  }
  status = U_ZERO_ERROR;
  icu::UnicodeString normalized = nfc->normalize(input, status);
  if (U_FAILURE(status)) return std::string(utf8);
  std::string out;
  normalized.toUTF8String(out);
  return out;
}

Polarity infer_polarity(const Token& token) {
  if (token.pos != PosTag::kV) return Polarity::kNone;
  static constexpr std::string_view kNegPrefix = "ن";
  bool form_negated = token.form.starts_with(kNegPrefix);
  bool lemma_negated = token.lemma.starts_with(kNegPrefix);
  return form_negated && !lemma_negated ? Polarity::kNeg : Polarity::kPos;
}

std::string check_sentence(const AnnotatedSentence& s) {
  const int n = static_cast<int>(s.tokens.size());
  if (n == 0) return "empty token list";
  int roots = 0;
  for (int i = 1; i <= n; ++i) {
    const Token& t = s.at(i);
    if (t.head < 0 || t.head > n) return "head out of range";
    if (t.head == i) return "self-loop at token " + std::to_string(i);
    if (t.head == 0) ++roots;
    if (t.polarity == Polarity::kNeg && t.pos != PosTag::kV &&
        t.pos != PosTag::kQuant && t.pos != PosTag::kAdv) {
      return "NEG polarity on non-verb/quantifier/adverb token " +
             std::to_string(i);
    }
  }
  if (roots != 1) return "expected exactly one root, found " + std::to_string(roots);
  // Every token must reach the root within n steps, otherwise there is a cycle.
  for (int i = 1; i <= n; ++i) {
    int cur = i;
    int steps = 0;
    while (cur != 0 && steps <= n) {
      cur = s.at(cur).head;
      ++steps;
    }
    if (cur != 0) return "dependency cycle through token " + std::to_string(i);
  }
  for (const SrlFrame& f : s.srl) {
    if (f.predicate < 1 || f.predicate > n) return "srl predicate out of range";
    std::set<std::string> roles;
    for (const SrlArg& a : f.args) {
      if (!is_label_safe(a.role)) return "invalid srl role '" + a.role + "'";
      if (!roles.insert(a.role).second) return "duplicate srl role '" + a.role + "'";
      if (a.start < 1 || a.end > n || a.start > a.end) return "srl span out of range";
    }
  }
  return {};
}

std::string check_pair(const SentencePair& pair) {
  if (pair.id.empty()) return "empty id";
  if (auto r = check_sentence(pair.premise); !r.empty()) return "premise: " + r;
  if (auto r = check_sentence(pair.hypothesis); !r.empty()) return "hypothesis: " + r;
  if (pair.category && pair.gold != GoldLabel::kContradiction) {
    return "category set on a non-contradiction pair";
  }
  return {};
}

SentencePair parse_pair_record(std::string_view line, std::size_t line_number,
                               const LoadOptions& options) {
  json j;
  try {
    j = json::parse(line);
  } catch (const json::parse_error& e) {
    fail(line_number, std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) fail(line_number, "record must be a JSON object");
  check_keys(j, {"id", "gold_label", "category", "premise", "hypothesis"},
             "record", line_number, options);
  SentencePair pair;
  pair.id = require_string(j, "id", line_number, "record");
  std::string gold = require_string(j, "gold_label", line_number, "record");
  auto label = parse_gold_label(gold);
  if (!label) fail(line_number, "unknown gold_label '" + gold + "'");
  pair.gold = *label;
  if (auto it = j.find("category"); it != j.end() && !it->is_null()) {
    if (!it->is_string()) fail(line_number, "category must be a string or null");
    auto category = parse_category(it->get<std::string>());
    if (!category) {
      fail(line_number, "unknown category '" + it->get<std::string>() + "'");
    }
    pair.category = *category;
  }
  pair.premise =
      parse_sentence(require(j, "premise", line_number, "record"), line_number, options);
  pair.hypothesis = parse_sentence(require(j, "hypothesis", line_number, "record"),
                                   line_number, options);
  if (auto reason = check_pair(pair); !reason.empty()) fail(line_number, reason);
  return pair;
}

std::string format_pair_record(const SentencePair& pair) {
  json j = json::object();
  j["id"] = pair.id;
  j["gold_label"] = to_string(pair.gold);
  j["category"] = pair.category ? json(to_string(*pair.category)) : json(nullptr);
  j["premise"] = sentence_to_json(pair.premise);
  j["hypothesis"] = sentence_to_json(pair.hypothesis);
  return j.dump();
}

Corpus load_corpus(const std::filesystem::path& path, const LoadOptions& options) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open corpus file '" + path.string() + "'");
  Corpus corpus;
  corpus.provenance = path.string();
  std::unordered_set<std::string> ids;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (is_blank(line)) continue;
    SentencePair pair = parse_pair_record(line, line_number, options);
    if (!ids.insert(pair.id).second) throw DuplicateId(line_number, pair.id);
    corpus.pairs.push_back(std::move(pair));
  }
  if (corpus.empty()) throw EmptyFile("corpus file '" + path.string() + "' has no records");
  return corpus;
}

void write_corpus(const Corpus& corpus, std::ostream& out) {
  for (const SentencePair& pair : corpus.pairs) out << format_pair_record(pair) << '\n';
}

void save_corpus(const Corpus& corpus, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write corpus file '" + path.string() + "'");
  write_corpus(corpus, out);
}

std::vector<Diagnostic> validate_corpus_file(const std::filesystem::path& path,
                                             const LoadOptions& options) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open corpus file '" + path.string() + "'");
  std::vector<Diagnostic> diagnostics;
  std::unordered_set<std::string> ids;
  std::string line;
  std::size_t line_number = 0;
  std::size_t records = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (is_blank(line)) continue;
    ++records;
    try {
      SentencePair pair = parse_pair_record(line, line_number, options);
      if (!ids.insert(pair.id).second) throw DuplicateId(line_number, pair.id);
    } catch (const MalformedRecord& e) {
      diagnostics.push_back({line_number, e.reason()});
    } catch (const DuplicateId& e) {
      diagnostics.push_back({line_number, e.what()});
    }
  }
  if (records == 0) diagnostics.push_back({0, "file has no records"});
  return diagnostics;
}

std::pair<Corpus, Corpus> split_corpus(const Corpus& corpus, double dev_fraction,
                                       std::uint64_t seed) {
  if (corpus.empty()) throw EmptyCorpus("cannot split an empty corpus");
  if (!(dev_fraction > 0.0 && dev_fraction < 1.0)) {
    throw OutOfRange("dev_fraction must lie in (0, 1)");
  }
  const std::size_t n = corpus.size();
  const auto dev_size = static_cast<std::size_t>(
      std::llround(dev_fraction * static_cast<double>(n)));
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::mt19937_64 rng(seed);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<bool> in_dev(n, false);
  for (std::size_t i = 0; i < dev_size; ++i) in_dev[order[i]] = true;

  Corpus dev, test;
  dev.provenance = corpus.provenance + "#dev";
  test.provenance = corpus.provenance + "#test";
  for (std::size_t i = 0; i < n; ++i) {
    (in_dev[i] ? dev : test).pairs.push_back(corpus.pairs[i]);
  }
  return {std::move(dev), std::move(test)};
}

}  // namespace contra
