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

#include "contra/tuples.h"

#include <algorithm>
#include <charconv>
#include <istream>
#include <map>
#include <ostream>

#include "contra/error.h"
#include "contra/features.h"

namespace contra {
namespace {

constexpr std::pair<PolSide, std::string_view> kSideNames[] = {
    {PolSide::kV1, "V1"}, {PolSide::kV2, "V2"},     {PolSide::kQ1, "Q1"},
    {PolSide::kQ2, "Q2"}, {PolSide::kAdv1, "ADV1"}, {PolSide::kAdv2, "ADV2"}};

std::string_view side_name(PolSide side) {
  for (const auto& [s, name] : kSideNames) {
    if (s == side) return name;
  }
  return "?";
}

std::string_view sent_name(SentLabel l) {
  switch (l) {
    case SentLabel::kPos: return "POS";
    case SentLabel::kNeg: return "NEG";
    case SentLabel::kNeu: return "NEU";
  }
  return "?";
}

std::optional<SentLabel> parse_sent(std::string_view s) {
  if (s == "POS") return SentLabel::kPos;
  if (s == "NEG") return SentLabel::kNeg;
  if (s == "NEU") return SentLabel::kNeu;
  return std::nullopt;
}

std::string slot_name(const Slot& slot) {
  struct Visitor {
    std::string operator()(PosTag tag) const { return std::string(to_string(tag)); }
    std::string operator()(AntSlot s) const { return "ANT" + std::to_string(s.k); }
    std::string operator()(CommonSlot s) const { return "COMMON" + std::to_string(s.k); }
    std::string operator()(NumSlot) const { return "NUM"; }
  };
  return std::visit(Visitor{}, slot);
}

std::optional<int> parse_index(std::string_view digits) {
  int k = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
  if (ec != std::errc() || ptr != digits.data() + digits.size() || k < 1) return std::nullopt;
  return k;
}

std::optional<Slot> parse_slot(std::string_view s) {
  if (s == "NUM") return NumSlot{};
  if (s.starts_with("COMMON")) {
    if (auto k = parse_index(s.substr(6))) return CommonSlot{*k};
    return std::nullopt;
  }
  if (s.starts_with("ANT")) {
    if (auto k = parse_index(s.substr(3))) return AntSlot{*k};
    return std::nullopt;
  }
  if (auto tag = parse_pos_tag(s)) return *tag;
  return std::nullopt;
}

std::string term_name(const PolTerm& t) {
  return std::string(side_name(t.side)) + (t.negative ? "-NEG" : "-POS");
}

std::optional<PolTerm> parse_term(std::string_view s) {
  auto dash = s.rfind('-');
  if (dash == std::string_view::npos) return std::nullopt;
  std::string_view side = s.substr(0, dash);
  std::string_view pol = s.substr(dash + 1);
  PolTerm term;
  if (pol == "NEG") {
    term.negative = true;
  } else if (pol != "POS") {
    return std::nullopt;
  }
  for (const auto& [v, name] : kSideNames) {
    if (name == side) {
      term.side = v;
      return term;
    }
  }
  return std::nullopt;
}

bool label_safe(std::string_view s) {
  return !s.empty() && s.find_first_of("(), \t\r\n") == std::string_view::npos;
}

SentLabel sent_label(double score) {
  switch (sentiment_sign(score)) {
    case 1: return SentLabel::kPos;
    case -1: return SentLabel::kNeg;
    default: return SentLabel::kNeu;
  }
}

TupleSet canonical_set(std::vector<Tuple> tuples) {
  std::vector<std::pair<std::string, Tuple>> keyed;
  keyed.reserve(tuples.size());
  for (auto& t : tuples) keyed.emplace_back(encode(t), std::move(t));
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  keyed.erase(std::unique(keyed.begin(), keyed.end(),
                          [](const auto& a, const auto& b) { return a.first == b.first; }),
              keyed.end());
  TupleSet out;
  out.reserve(keyed.size());
  for (auto& [_, t] : keyed) out.push_back(std::move(t));
  return out;
}

bool is_content(const Token& t, const MarkerLists& markers) {
  return t.pos != PosTag::kPunc && !markers.is_stopword(t.lemma);
}

}  // namespace

SimilarityBin bin_similarity(double x) {
  if (!(x >= 0.0 && x <= 1.0)) throw OutOfRange("similarity must lie in [0, 1]");
  if (x < 0.3) return SimilarityBin::kB0;
  if (x < 0.6) return SimilarityBin::kB1;
  return SimilarityBin::kB2;
}

std::string_view to_string(SimilarityBin bin) {
  switch (bin) {
    case SimilarityBin::kB0: return "B0";
    case SimilarityBin::kB1: return "B1";
    case SimilarityBin::kB2: return "B2";
  }
  return "?";
}

std::string encode(const Tuple& tuple) {
  struct Visitor {
    std::string operator()(const DepTuple& t) const {
      return "DEP(" + t.relation + "," + slot_name(t.dependent) + "," + slot_name(t.head) + ")";
    }
    std::string operator()(const SrlSimTuple& t) const {
      return "SRLSIM(" + t.role1 + "," + t.role2 + "," + std::string(to_string(t.bin)) + ")";
    }
    std::string operator()(const SentTuple& t) const {
      return "SENT(" + std::string(sent_name(t.first)) + "," + std::string(sent_name(t.second)) +
             ")";
    }
    std::string operator()(const PolTuple& t) const {
      return "POL(" + term_name(t.left) + "," + term_name(t.right) + ")";
    }
  };
  return std::visit(Visitor{}, tuple);
}

std::optional<Tuple> decode(std::string_view s) {
  auto open = s.find('(');
  if (open == std::string_view::npos || s.empty() || s.back() != ')') return std::nullopt;
  std::string_view kind = s.substr(0, open);
  std::string_view body = s.substr(open + 1, s.size() - open - 2);
  if (body.find_first_of("()") != std::string_view::npos) return std::nullopt;
  std::vector<std::string_view> args;
  std::size_t pos = 0;
  while (true) {
    auto comma = body.find(',', pos);
    args.push_back(body.substr(pos, comma - pos));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }

  std::optional<Tuple> out;
  if (kind == "DEP" && args.size() == 3 && label_safe(args[0])) {
    auto a = parse_slot(args[1]);
    auto b = parse_slot(args[2]);
    if (a && b) out = DepTuple{std::string(args[0]), *a, *b};
  } else if (kind == "SRLSIM" && args.size() == 3 && label_safe(args[0]) &&
             label_safe(args[1]) && args[0] <= args[1]) {
    for (auto bin : {SimilarityBin::kB0, SimilarityBin::kB1, SimilarityBin::kB2}) {
      if (to_string(bin) == args[2]) {
        out = SrlSimTuple{std::string(args[0]), std::string(args[1]), bin};
      }
    }
  } else if (kind == "SENT" && args.size() == 2) {
    auto a = parse_sent(args[0]);
    auto b = parse_sent(args[1]);
    if (a && b) out = SentTuple{*a, *b};
  } else if (kind == "POL" && args.size() == 2) {
    auto a = parse_term(args[0]);
    auto b = parse_term(args[1]);
    if (a && b) out = PolTuple{*a, *b};
  }
  // Reject spellings that decode but are not canonical (e.g. ANT01).
  if (out && encode(*out) != s) return std::nullopt;
  return out;
}

TupleSet extract_dep_tuples(const SentencePair& pair, const AntonymLexicon& antonyms,
                            const MarkerLists& markers) {
  const AnnotatedSentence* sides[2] = {&pair.premise, &pair.hypothesis};

  std::set<std::string> lemmas[2];
  for (int s = 0; s < 2; ++s) {
    for (const Token& t : sides[s]->tokens) {
      if (is_content(t, markers)) lemmas[s].insert(t.lemma);
    }
  }
  // Antonym partner of each lemma across the two sentences (first pair wins).
  std::map<std::string, std::string> partner;
  for (const Token& a : sides[0]->tokens) {
    for (const Token& b : sides[1]->tokens) {
      if (!antonyms.are_antonyms(a.lemma, b.lemma)) continue;
      partner.emplace(a.lemma, b.lemma);
      partner.emplace(b.lemma, a.lemma);
    }
  }

  // Slot indices in first-occurrence order, premise first.
  std::map<std::string, int> ant_index;
  std::map<std::string, int> common_index;
  int next_ant = 1;
  int next_common = 1;
  for (int s = 0; s < 2; ++s) {
    for (const Token& t : sides[s]->tokens) {
      if (auto it = partner.find(t.lemma); it != partner.end()) {
        if (!ant_index.count(t.lemma)) {
          auto other = ant_index.find(it->second);
          int k = other != ant_index.end() ? other->second : next_ant++;
          ant_index[t.lemma] = k;
        }
      } else if (is_content(t, markers) && lemmas[0].count(t.lemma) &&
                 lemmas[1].count(t.lemma) && !common_index.count(t.lemma)) {
        common_index[t.lemma] = next_common++;
      }
    }
  }

  auto slot_of = [&](const Token& t, bool& special) -> Slot {
    special = true;
    if (auto it = ant_index.find(t.lemma); it != ant_index.end()) return AntSlot{it->second};
    if (auto it = common_index.find(t.lemma); it != common_index.end()) {
      return CommonSlot{it->second};
    }
    if (t.pos == PosTag::kNum) return NumSlot{};
    special = false;
    return t.pos;
  };

  std::vector<Tuple> out;
  for (int s = 0; s < 2; ++s) {
    const AnnotatedSentence& sent = *sides[s];
    for (const Token& t : sent.tokens) {
      if (t.head == 0) continue;
      bool dep_special = false;
      bool head_special = false;
      Slot dep = slot_of(t, dep_special);
      Slot head = slot_of(sent.at(t.head), head_special);
      if (dep_special || head_special) out.push_back(DepTuple{t.deprel, dep, head});
    }
  }
  return canonical_set(std::move(out));
}

TupleSet extract_srl_tuples(const SentencePair& pair, const MarkerLists& markers) {
  std::vector<Tuple> out;
  for (const SrlFrame& fa : pair.premise.srl) {
    for (const SrlArg& a : fa.args) {
      LemmaBag bag_a = span_bag(pair.premise, a.start, a.end, markers);
      for (const SrlFrame& fb : pair.hypothesis.srl) {
        for (const SrlArg& b : fb.args) {
          double sim = bag_cosine(bag_a, span_bag(pair.hypothesis, b.start, b.end, markers));
          const auto& [r1, r2] = std::minmax(a.role, b.role);
          out.push_back(SrlSimTuple{r1, r2, bin_similarity(sim)});
        }
      }
    }
  }
  return canonical_set(std::move(out));
}

Tuple extract_sentiment_tuple(const SentencePair& pair, const PolarityLexicon& lexicon,
                              const MarkerLists& markers) {
  return SentTuple{sent_label(sentence_sentiment(pair.premise, lexicon, markers)),
                   sent_label(sentence_sentiment(pair.hypothesis, lexicon, markers))};
}

TupleSet extract_polarity_tuples(const SentencePair& pair, const MarkerLists& markers) {
  std::vector<Tuple> out;
  const auto& p = pair.premise;
  const auto& h = pair.hypothesis;
  auto neg = [](const Token& t) { return t.polarity == Polarity::kNeg; };
  for (const Token& a : p.tokens) {
    if (a.pos != PosTag::kV) continue;
    for (const Token& b : h.tokens) {
      if (b.pos == PosTag::kV && b.lemma == a.lemma) {
        out.push_back(PolTuple{{PolSide::kV1, neg(a)}, {PolSide::kV2, neg(b)}});
      }
    }
  }
  const AnnotatedSentence* sides[2] = {&p, &h};
  for (int s = 0; s < 2; ++s) {
    const AnnotatedSentence& sent = *sides[s];
    auto heads = clause_heads(sent);
    // Markers outside any verb's clause pair with the first verb, if any.
    int fallback = 0;
    for (int i = 1; i <= static_cast<int>(sent.size()) && fallback == 0; ++i) {
      if (sent.at(i).pos == PosTag::kV) fallback = i;
    }
    for (int i = 1; i <= static_cast<int>(sent.size()); ++i) {
      const Token& m = sent.at(i);
      if (!is_negative_marker(m, markers)) continue;
      int verb = heads[i] != 0 ? heads[i] : fallback;
      if (verb == 0) continue;
      bool quantifier = markers.is_negative_quantifier(m.lemma) ||
                        (!markers.is_negative_adverb(m.lemma) && m.pos == PosTag::kQuant);
      PolSide verb_side = s == 0 ? PolSide::kV1 : PolSide::kV2;
      PolSide marker_side = quantifier ? (s == 0 ? PolSide::kQ1 : PolSide::kQ2)
                                       : (s == 0 ? PolSide::kAdv1 : PolSide::kAdv2);
      out.push_back(PolTuple{{verb_side, neg(sent.at(verb))}, {marker_side, true}});
    }
  }
  return canonical_set(std::move(out));
}

std::string_view to_string(TxLabel label) {
  return label == TxLabel::kContra ? "CONTRA" : "NOTCONTRA";
}

std::optional<TxLabel> parse_tx_label(std::string_view s) {
  if (s == "CONTRA") return TxLabel::kContra;
  if (s == "NOTCONTRA") return TxLabel::kNotContra;
  return std::nullopt;
}

Transaction extract_transaction(const SentencePair& pair, const Lexicons& lex) {
  Transaction tx;
  tx.pair_id = pair.id;
  tx.label = pair.is_contradiction() ? TxLabel::kContra : TxLabel::kNotContra;
  for (const Tuple& t : extract_dep_tuples(pair, lex.antonyms, lex.markers)) {
    tx.items.insert(encode(t));
  }
  for (const Tuple& t : extract_srl_tuples(pair, lex.markers)) tx.items.insert(encode(t));
  tx.items.insert(encode(extract_sentiment_tuple(pair, lex.polarity, lex.markers)));
  for (const Tuple& t : extract_polarity_tuples(pair, lex.markers)) tx.items.insert(encode(t));
  return tx;
}

std::vector<Transaction> extract_transactions(const Corpus& corpus, const Lexicons& lexicons) {
  std::vector<Transaction> out;
  out.reserve(corpus.size());
  for (const SentencePair& pair : corpus.pairs) out.push_back(extract_transaction(pair, lexicons));
  return out;
}

void write_transactions(const std::vector<Transaction>& txs, std::ostream& out) {
  for (const Transaction& tx : txs) {
    out << tx.pair_id << '\t' << to_string(tx.label) << '\t';
    bool first = true;
    for (const std::string& item : tx.items) {
      if (!first) out << ',';
      out << item;
      first = false;
    }
    out << '\n';
  }
}

std::vector<Transaction> read_transactions(std::istream& in) {
  std::vector<Transaction> out;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (line.empty()) continue;
    auto t1 = line.find('\t');
    auto t2 = t1 == std::string::npos ? t1 : line.find('\t', t1 + 1);
    if (t2 == std::string::npos) throw MalformedRecord(number, "expected three tab-separated fields");
    Transaction tx;
    tx.pair_id = line.substr(0, t1);
    auto label = parse_tx_label(std::string_view(line).substr(t1 + 1, t2 - t1 - 1));
    if (!label) throw MalformedRecord(number, "unknown transaction label");
    tx.label = *label;
    // Items contain commas inside parentheses; split at depth zero only.
    std::string_view items = std::string_view(line).substr(t2 + 1);
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= items.size(); ++i) {
      if (i == items.size() || (items[i] == ',' && depth == 0)) {
        std::string_view item = items.substr(start, i - start);
        if (!item.empty()) {
          if (!decode(item)) throw MalformedRecord(number, "bad tuple '" + std::string(item) + "'");
          tx.items.emplace(item);
        }
        start = i + 1;
      } else if (items[i] == '(') {
        ++depth;
      } else if (items[i] == ')') {
        --depth;
      }
    }
    out.push_back(std::move(tx));
  }
  return out;
}

}  // namespace contra
