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

#include "contra/features.h"

#include <algorithm>
#include <cmath>
#include <set>
#include <utility>

namespace contra {
namespace {

constexpr double kZero = 1e-12;

bool is_content(const Token& t, const MarkerLists& markers) {
  return t.pos != PosTag::kPunc && !markers.is_stopword(t.lemma);
}

std::set<std::string> content_lemmas(const AnnotatedSentence& s, const MarkerLists& markers) {
  std::set<std::string> out;
  for (const Token& t : s.tokens) {
    if (is_content(t, markers)) out.insert(t.lemma);
  }
  return out;
}

std::string head_key(const AnnotatedSentence& s, const Token& t) {
  return t.head == 0 ? std::string("\x01root") : s.at(t.head).lemma;
}

// Entity values per NER type; a value is a run of consecutive tokens of the
// same type, lemmas joined by spaces.
std::map<NerTag, std::set<std::string>> entities(const AnnotatedSentence& s) {
  std::map<NerTag, std::set<std::string>> out;
  std::string current;
  NerTag current_tag = NerTag::kO;
  auto flush = [&] {
    if (current_tag != NerTag::kO) out[current_tag].insert(current);
    current.clear();
    current_tag = NerTag::kO;
  };
  for (const Token& t : s.tokens) {
    if (t.ner != current_tag) flush();
    if (t.ner == NerTag::kO) continue;
    if (!current.empty()) current += ' ';
    current += t.lemma;
    current_tag = t.ner;
  }
  flush();
  return out;
}

std::size_t non_punct_count(const AnnotatedSentence& s) {
  return std::count_if(s.tokens.begin(), s.tokens.end(),
                       [](const Token& t) { return t.pos != PosTag::kPunc; });
}

// Verbs reachable from the root through verbs only.
std::vector<int> root_path_verbs(const AnnotatedSentence& s) {
  const int n = static_cast<int>(s.size());
  std::vector<int> state(n + 1, -1);  // -1 unknown, 0 no, 1 yes
  std::vector<int> out;
  for (int i = 1; i <= n; ++i) {
    std::vector<int> chain;
    int cur = i;
    int verdict = 0;
    while (true) {
      if (state[cur] != -1) {
        verdict = state[cur];
        break;
      }
      if (s.at(cur).pos != PosTag::kV) {
        verdict = 0;
        chain.push_back(cur);
        break;
      }
      chain.push_back(cur);
      if (s.at(cur).head == 0) {
        verdict = 1;
        break;
      }
      cur = s.at(cur).head;
    }
    for (int c : chain) {
      state[c] = s.at(c).pos == PosTag::kV ? verdict : 0;
    }
    if (state[i] == 1) out.push_back(i);
  }
  return out;
}

// Roles (plus PRED for predicates) covering each token.
std::vector<std::set<std::string>> roles_by_token(const AnnotatedSentence& s) {
  std::vector<std::set<std::string>> out(s.size() + 1);
  for (const SrlFrame& f : s.srl) {
    out[f.predicate].insert("PRED");
    for (const SrlArg& a : f.args) {
      for (int i = a.start; i <= a.end; ++i) out[i].insert(a.role);
    }
  }
  return out;
}

// Lemma bag per role, merged across frames.
std::map<std::string, LemmaBag> role_bags(const AnnotatedSentence& s,
                                          const MarkerLists& markers) {
  std::map<std::string, LemmaBag> out;
  for (const SrlFrame& f : s.srl) {
    for (const SrlArg& a : f.args) {
      LemmaBag& bag = out[a.role];
      for (const auto& [lemma, count] : span_bag(s, a.start, a.end, markers)) {
        bag[lemma] += count;
      }
    }
  }
  return out;
}

// Raw lemma set per role (no stopword filtering) for overlap tests.
std::map<std::string, std::set<std::string>> role_lemmas(const AnnotatedSentence& s) {
  std::map<std::string, std::set<std::string>> out;
  for (const SrlFrame& f : s.srl) {
    for (const SrlArg& a : f.args) {
      auto& lemmas = out[a.role];
      for (int i = a.start; i <= a.end; ++i) lemmas.insert(s.at(i).lemma);
    }
  }
  return out;
}

}  // namespace

std::array<double, FeatureVector::kSize> FeatureVector::values() const {
  return {sentiment_disagreement, ne_mismatch, length_difference, adjective_contrast,
          verb_contrast,          negation,    common_words,      cosine_similarity,
          srl_mismatch,           antonym};
}

FeatureVector FeatureVector::from_values(const std::array<double, kSize>& v) {
  FeatureVector f;
  f.sentiment_disagreement = v[0];
  f.ne_mismatch = v[1];
  f.length_difference = v[2];
  f.adjective_contrast = v[3];
  f.verb_contrast = v[4];
  f.negation = v[5];
  f.common_words = v[6];
  f.cosine_similarity = v[7];
  f.srl_mismatch = v[8];
  f.antonym = v[9];
  return f;
}

double bag_cosine(const LemmaBag& a, const LemmaBag& b) {
  if (a.empty() || b.empty()) return 0.0;
  double dot = 0.0;
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (ia->first < ib->first) {
      ++ia;
    } else if (ib->first < ia->first) {
      ++ib;
    } else {
      dot += static_cast<double>(ia->second) * static_cast<double>(ib->second);
      ++ia;
      ++ib;
    }
  }
  auto norm2 = [](const LemmaBag& bag) {
    double sum = 0.0;
    for (const auto& [_, c] : bag) sum += static_cast<double>(c) * c;
    return sum;
  };
  double denom = std::sqrt(norm2(a) * norm2(b));
  if (denom <= 0.0) return 0.0;
  return std::clamp(dot / denom, 0.0, 1.0);
}

LemmaBag content_bag(const AnnotatedSentence& s, const MarkerLists& markers) {
  return span_bag(s, 1, static_cast<int>(s.size()), markers);
}

LemmaBag span_bag(const AnnotatedSentence& s, int start, int end, const MarkerLists& markers) {
  LemmaBag bag;
  for (int i = start; i <= end; ++i) {
    const Token& t = s.at(i);
    if (is_content(t, markers)) ++bag[t.lemma];
  }
  return bag;
}

bool is_negative_marker(const Token& t, const MarkerLists& markers) {
  if (markers.is_negative_quantifier(t.lemma) || markers.is_negative_adverb(t.lemma)) {
    return true;
  }
  return (t.pos == PosTag::kQuant || t.pos == PosTag::kAdv) && t.polarity == Polarity::kNeg;
}

std::vector<int> clause_heads(const AnnotatedSentence& s) {
  const int n = static_cast<int>(s.size());
  std::vector<int> out(n + 1, 0);
  for (int i = 1; i <= n; ++i) {
    int cur = i;
    // Trees are validated acyclic on load; the step bound guards hand-built ones.
    for (int steps = 0; cur != 0 && steps <= n; ++steps) {
      if (s.at(cur).pos == PosTag::kV) break;
      cur = s.at(cur).head;
    }
    out[i] = (cur != 0 && s.at(cur).pos == PosTag::kV) ? cur : 0;
  }
  return out;
}

namespace {

// negated[c] for every clause head c (0 = verbless top level).
std::vector<bool> negated_clauses(const AnnotatedSentence& s, const std::vector<int>& heads,
                                  const MarkerLists& markers) {
  const int n = static_cast<int>(s.size());
  std::vector<bool> negated(n + 1, false);
  for (int i = 1; i <= n; ++i) {
    const Token& t = s.at(i);
    if (t.pos == PosTag::kV && t.polarity == Polarity::kNeg) negated[i] = true;
    if (is_negative_marker(t, markers)) negated[heads[i]] = true;
  }
  return negated;
}

}  // namespace

Polarity effective_polarity(const AnnotatedSentence& s, int verb_index,
                            const MarkerLists& markers) {
  auto heads = clause_heads(s);
  auto negated = negated_clauses(s, heads, markers);
  return negated[verb_index] ? Polarity::kNeg : Polarity::kPos;
}

double sentence_sentiment(const AnnotatedSentence& s, const PolarityLexicon& lexicon,
                          const MarkerLists& markers) {
  auto heads = clause_heads(s);
  auto negated = negated_clauses(s, heads, markers);
  double score = 0.0;
  for (int i = 1; i <= static_cast<int>(s.size()); ++i) {
    auto entry = lexicon.polarity_of(s.at(i).lemma);
    if (!entry) continue;
    double value = entry->signed_strength();
    score += negated[heads[i]] ? -value : value;
  }
  return score;
}

int sentiment_sign(double score) {
  if (std::abs(score) < kZero) return 0;
  return score > 0 ? 1 : -1;
}

double f_sentiment_disagreement(const SentencePair& pair, const PolarityLexicon& lexicon,
                                const MarkerLists& markers) {
  int a = sentiment_sign(sentence_sentiment(pair.premise, lexicon, markers));
  int b = sentiment_sign(sentence_sentiment(pair.hypothesis, lexicon, markers));
  if (a * b < 0) return 1.0;
  if ((a == 0) != (b == 0)) return 0.5;
  return 0.0;
}

double f_ne_mismatch(const SentencePair& pair) {
  auto a = entities(pair.premise);
  auto b = entities(pair.hypothesis);
  int shared = 0;
  int mismatched = 0;
  for (const auto& [type, values] : a) {
    auto it = b.find(type);
    if (it == b.end()) continue;
    ++shared;
    if (values != it->second) ++mismatched;
  }
  return shared == 0 ? 0.0 : static_cast<double>(mismatched) / shared;
}

double f_length_difference(const SentencePair& pair) {
  auto n1 = static_cast<double>(non_punct_count(pair.premise));
  auto n2 = static_cast<double>(non_punct_count(pair.hypothesis));
  double m = std::max(n1, n2);
  return m == 0.0 ? 0.0 : std::abs(n1 - n2) / m;
}

double f_adjective_contrast(const SentencePair& pair, const AntonymLexicon& antonyms) {
  const auto& p = pair.premise;
  const auto& h = pair.hypothesis;
  int aligned = 0;
  int different = 0;
  for (const Token& a : p.tokens) {
    if (a.pos != PosTag::kAdj) continue;
    std::string key = head_key(p, a);
    for (const Token& b : h.tokens) {
      if (b.pos != PosTag::kAdj || head_key(h, b) != key) continue;
      if (antonyms.are_antonyms(a.lemma, b.lemma)) return 1.0;
      ++aligned;
      if (a.lemma != b.lemma) ++different;
    }
  }
  return aligned == 0 ? 0.0 : static_cast<double>(different) / aligned;
}

double f_verb_contrast(const SentencePair& pair, const AntonymLexicon& antonyms) {
  std::set<std::string> a, b;
  for (int i : root_path_verbs(pair.premise)) a.insert(pair.premise.at(i).lemma);
  for (int i : root_path_verbs(pair.hypothesis)) b.insert(pair.hypothesis.at(i).lemma);
  for (const auto& x : a) {
    for (const auto& y : b) {
      if (antonyms.are_antonyms(x, y)) return 1.0;
    }
  }
  std::set<std::string> all = a;
  all.insert(b.begin(), b.end());
  if (all.empty()) return 0.0;
  std::size_t common = 0;
  for (const auto& x : a) common += b.count(x);
  return 1.0 - static_cast<double>(common) / static_cast<double>(all.size());
}

double f_negation(const SentencePair& pair, const MarkerLists& markers) {
  // Negation states seen per verb lemma; a shared lemma fires when its state
  // sets differ, so repeated verbs inside one sentence never fire alone.
  auto states = [&markers](const AnnotatedSentence& s) {
    auto heads = clause_heads(s);
    auto negated = negated_clauses(s, heads, markers);
    std::map<std::string, std::set<bool>> out;
    for (int i = 1; i <= static_cast<int>(s.size()); ++i) {
      if (s.at(i).pos == PosTag::kV) out[s.at(i).lemma].insert(negated[i]);
    }
    return out;
  };
  auto a = states(pair.premise);
  auto b = states(pair.hypothesis);
  for (const auto& [lemma, seen] : a) {
    auto it = b.find(lemma);
    if (it != b.end() && it->second != seen) return 1.0;
  }
  return 0.0;
}

double f_common_words(const SentencePair& pair, const MarkerLists& markers) {
  auto a = content_lemmas(pair.premise, markers);
  auto b = content_lemmas(pair.hypothesis, markers);
  // Two sentences without content words agree vacuously.
  if (a.empty() && b.empty()) return 1.0;
  if (a.empty() || b.empty()) return 0.0;
  std::size_t shared = 0;
  for (const auto& x : a) shared += b.count(x);
  return static_cast<double>(shared) / static_cast<double>(std::min(a.size(), b.size()));
}

double f_cosine_similarity(const SentencePair& pair, const MarkerLists& markers) {
  LemmaBag a = content_bag(pair.premise, markers);
  LemmaBag b = content_bag(pair.hypothesis, markers);
  if (a.empty() && b.empty()) return 1.0;
  return bag_cosine(a, b);
}

double f_srl_mismatch(const SentencePair& pair, const MarkerLists& markers) {
  // TMP/LOC conflict: the same adjunct role on both sides with no lemma overlap.
  auto la = role_lemmas(pair.premise);
  auto lb = role_lemmas(pair.hypothesis);
  for (std::string_view role : {"TMP", "LOC"}) {
    auto ia = la.find(std::string(role));
    auto ib = lb.find(std::string(role));
    if (ia == la.end() || ib == lb.end()) continue;
    bool overlap = std::any_of(ia->second.begin(), ia->second.end(),
                               [&](const std::string& l) { return ib->second.count(l) > 0; });
    if (!overlap) return 1.0;
  }
  // Argument swap: pairing A0 with the other side's A1 (and vice versa)
  // scores strictly better than the straight A0/A0, A1/A1 pairing.
  auto ba = role_bags(pair.premise, markers);
  auto bb = role_bags(pair.hypothesis, markers);
  if (ba.count("A0") && ba.count("A1") && bb.count("A0") && bb.count("A1")) {
    double straight = bag_cosine(ba["A0"], bb["A0"]) + bag_cosine(ba["A1"], bb["A1"]);
    double crossed = bag_cosine(ba["A0"], bb["A1"]) + bag_cosine(ba["A1"], bb["A0"]);
    if (crossed > straight) return 1.0;
  }
  return 0.0;
}

double f_antonym(const SentencePair& pair, const AntonymLexicon& antonyms) {
  const auto& p = pair.premise;
  const auto& h = pair.hypothesis;
  auto rp = roles_by_token(p);
  auto rh = roles_by_token(h);
  double best = 0.0;
  for (int i = 1; i <= static_cast<int>(p.size()); ++i) {
    const Token& a = p.at(i);
    if (!antonyms.contains(a.lemma)) continue;
    for (int j = 1; j <= static_cast<int>(h.size()); ++j) {
      const Token& b = h.at(j);
      if (!antonyms.are_antonyms(a.lemma, b.lemma)) continue;
      bool same_slot = a.deprel == b.deprel && head_key(p, a) == head_key(h, b);
      bool same_role = std::any_of(rp[i].begin(), rp[i].end(),
                                   [&](const std::string& r) { return rh[j].count(r) > 0; });
      if (same_slot || same_role) return 1.0;
      best = 0.5;
    }
  }
  return best;
}

FeatureVector extract_feature_vector(const SentencePair& pair, const Lexicons& lex) {
  FeatureVector f;
  f.sentiment_disagreement = f_sentiment_disagreement(pair, lex.polarity, lex.markers);
  f.ne_mismatch = f_ne_mismatch(pair);
  f.length_difference = f_length_difference(pair);
  f.adjective_contrast = f_adjective_contrast(pair, lex.antonyms);
  f.verb_contrast = f_verb_contrast(pair, lex.antonyms);
  f.negation = f_negation(pair, lex.markers);
  f.common_words = f_common_words(pair, lex.markers);
  f.cosine_similarity = f_cosine_similarity(pair, lex.markers);
  f.srl_mismatch = f_srl_mismatch(pair, lex.markers);
  f.antonym = f_antonym(pair, lex.antonyms);
  return f;
}

}  // namespace contra
