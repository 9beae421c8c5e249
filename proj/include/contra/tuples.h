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

// Generalized tuples extracted from a sentence pair for rule mining, and the
// transactions built from them.
//
// Canonical encodings (the mining alphabet, stable across versions):
//   DEP(rel,slot1,slot2)        slot1 = dependent, slot2 = head
//   SRLSIM(role1,role2,B0|B1|B2) roles in lexicographic order
//   SENT(POS|NEG|NEU,POS|NEG|NEU)
//   POL(V1-POS,V2-NEG)          sides V1 V2 Q1 Q2 ADV1 ADV2

#ifndef CONTRA_TUPLES_H_
#define CONTRA_TUPLES_H_

#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "contra/corpus.h"
#include "contra/lexicons.h"

namespace contra {

enum class SimilarityBin { kB0, kB1, kB2 };

// B0 = [0, 0.3), B1 = [0.3, 0.6), B2 = [0.6, 1]. Throws OutOfRange outside [0, 1].
SimilarityBin bin_similarity(double x);
std::string_view to_string(SimilarityBin bin);

struct AntSlot {
  int k = 1;
  bool operator==(const AntSlot&) const = default;
};
struct CommonSlot {
  int k = 1;
  bool operator==(const CommonSlot&) const = default;
};
struct NumSlot {
  bool operator==(const NumSlot&) const = default;
};
// A POS slot never carries NUM: NUM-tagged endpoints take NumSlot.
using Slot = std::variant<PosTag, AntSlot, CommonSlot, NumSlot>;

struct DepTuple {
  std::string relation;
  Slot dependent;
  Slot head;
  bool operator==(const DepTuple&) const = default;
};

struct SrlSimTuple {
  std::string role1;
  std::string role2;
  SimilarityBin bin = SimilarityBin::kB0;
  bool operator==(const SrlSimTuple&) const = default;
};

enum class SentLabel { kPos, kNeg, kNeu };

struct SentTuple {
  SentLabel first = SentLabel::kNeu;
  SentLabel second = SentLabel::kNeu;
  bool operator==(const SentTuple&) const = default;
};

enum class PolSide { kV1, kV2, kQ1, kQ2, kAdv1, kAdv2 };

struct PolTerm {
  PolSide side = PolSide::kV1;
  bool negative = false;
  bool operator==(const PolTerm&) const = default;
};

struct PolTuple {
  PolTerm left;
  PolTerm right;
  bool operator==(const PolTuple&) const = default;
};

using Tuple = std::variant<DepTuple, SrlSimTuple, SentTuple, PolTuple>;

std::string encode(const Tuple& tuple);
// nullopt if the string is not a canonical encoding.
std::optional<Tuple> decode(std::string_view encoding);

// Sorted by encoding, duplicates removed.
using TupleSet = std::vector<Tuple>;

TupleSet extract_dep_tuples(const SentencePair& pair, const AntonymLexicon& antonyms,
                            const MarkerLists& markers);
TupleSet extract_srl_tuples(const SentencePair& pair, const MarkerLists& markers);
Tuple extract_sentiment_tuple(const SentencePair& pair, const PolarityLexicon& lexicon,
                              const MarkerLists& markers);
TupleSet extract_polarity_tuples(const SentencePair& pair, const MarkerLists& markers);

enum class TxLabel { kContra, kNotContra };
std::string_view to_string(TxLabel label);
std::optional<TxLabel> parse_tx_label(std::string_view s);

struct Transaction {
  std::set<std::string> items;  // canonical tuple encodings
  TxLabel label = TxLabel::kNotContra;
  std::string pair_id;

  bool operator==(const Transaction&) const = default;
};

Transaction extract_transaction(const SentencePair& pair, const Lexicons& lexicons);
std::vector<Transaction> extract_transactions(const Corpus& corpus, const Lexicons& lexicons);

// One line per transaction: pair_id<TAB>label<TAB>item1,item2,...
void write_transactions(const std::vector<Transaction>& txs, std::ostream& out);
// Throws MalformedRecord on a bad line.
std::vector<Transaction> read_transactions(std::istream& in);

}  // namespace contra

#endif  // CONTRA_TUPLES_H_
