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

#include "contra/lexicons.h"

#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <vector>

#include "contra/corpus.h"
#include "contra/error.h"

namespace contra {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.back() == '\r' || s.back() == ' ')) s.remove_suffix(1);
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  return s;
}

std::vector<std::string_view> split_tabs(std::string_view s) {
  std::vector<std::string_view> fields;
  std::size_t pos = 0;
  while (true) {
    std::size_t tab = s.find('\t', pos);
    fields.push_back(trim(s.substr(pos, tab - pos)));
    if (tab == std::string_view::npos) break;
    pos = tab + 1;
  }
  return fields;
}

// Calls fn(line_number, content) for every non-empty, non-comment line.
void for_each_line(const std::filesystem::path& path,
                   const std::function<void(std::size_t, std::string_view)>& fn) {
  std::ifstream in(path);
  if (!in) throw MissingLexiconFile("missing lexicon file '" + path.string() + "'");
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    std::string_view content = trim(line);
    if (content.empty() || content.front() == '#') continue;
    fn(number, content);
  }
}

using LemmaSet = std::set<std::string, std::less<>>;

struct SourcedSet {
  LemmaSet lemmas;
  std::unordered_map<std::string, std::size_t> lines;
};

SourcedSet load_list(const std::filesystem::path& path) {
  SourcedSet out;
  for_each_line(path, [&](std::size_t number, std::string_view content) {
    if (content.find('\t') != std::string_view::npos) {
      throw MalformedLexiconLine(path.filename().string(), number,
                                 "expected a single lemma");
    }
    std::string lemma = normalize_nfc(content);
    out.lines.emplace(lemma, number);
    out.lemmas.insert(std::move(lemma));
  });
  return out;
}

}  // namespace

bool AntonymLexicon::add(std::string_view a, std::string_view b) {
  if (a == b) return false;
  auto key = a < b ? std::pair(std::string(a), std::string(b))
                   : std::pair(std::string(b), std::string(a));
  pairs_.insert(std::move(key));
  members_.emplace(a);
  members_.emplace(b);
  return true;
}

bool AntonymLexicon::are_antonyms(std::string_view a, std::string_view b) const {
  if (a == b) return false;
  auto key = a < b ? std::pair(std::string(a), std::string(b))
                   : std::pair(std::string(b), std::string(a));
  return pairs_.count(key) > 0;
}

bool AntonymLexicon::contains(std::string_view lemma) const {
  return members_.find(lemma) != members_.end();
}

bool PolarityLexicon::add(std::string lemma, PolarityEntry entry) {
  return entries_.emplace(std::move(lemma), entry).second;
}

std::optional<PolarityEntry> PolarityLexicon::polarity_of(std::string_view lemma) const {
  auto it = entries_.find(std::string(lemma));
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

Lexicons load_lexicons(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) {
    throw MissingLexiconFile("lexicon directory '" + dir.string() + "' does not exist");
  }
  Lexicons lex;

  const std::string antonyms_name(kAntonymsFile);
  for_each_line(dir / kAntonymsFile, [&](std::size_t number, std::string_view content) {
    auto fields = split_tabs(content);
    if (fields.size() != 2 || fields[0].empty() || fields[1].empty()) {
      throw MalformedLexiconLine(antonyms_name, number, "expected lemma1<TAB>lemma2");
    }
    if (!lex.antonyms.add(normalize_nfc(fields[0]), normalize_nfc(fields[1]))) {
      throw MalformedLexiconLine(antonyms_name, number, "a lemma cannot be its own antonym");
    }
  });

  const std::string polarity_name(kPolarityFile);
  for_each_line(dir / kPolarityFile, [&](std::size_t number, std::string_view content) {
    auto fields = split_tabs(content);
    if (fields.size() != 3 || fields[0].empty()) {
      throw MalformedLexiconLine(polarity_name, number,
                                 "expected lemma<TAB>POSITIVE|NEGATIVE<TAB>strength");
    }
    PolarityEntry entry;
    if (fields[1] == "POSITIVE") {
      entry.sentiment = Sentiment::kPositive;
    } else if (fields[1] == "NEGATIVE") {
      entry.sentiment = Sentiment::kNegative;
    } else {
      throw MalformedLexiconLine(polarity_name, number,
                                 "unknown polarity '" + std::string(fields[1]) + "'");
    }
    double strength = 0.0;
    auto [ptr, ec] = std::from_chars(fields[2].data(), fields[2].data() + fields[2].size(),
                                     strength);
    if (ec != std::errc() || ptr != fields[2].data() + fields[2].size() ||
        !(strength > 0.0 && strength <= 1.0)) {
      throw MalformedLexiconLine(polarity_name, number, "strength must be a number in (0, 1]");
    }
    entry.strength = strength;
    if (!lex.polarity.add(normalize_nfc(fields[0]), entry)) {
      throw MalformedLexiconLine(polarity_name, number,
                                 "duplicate entry for '" + std::string(fields[0]) + "'");
    }
  });

  SourcedSet stop = load_list(dir / kStopwordsFile);
  SourcedSet quant = load_list(dir / kNegQuantifiersFile);
  SourcedSet adv = load_list(dir / kNegAdverbsFile);
  auto check_disjoint = [](const SourcedSet& a, const SourcedSet& b,
                           std::string_view b_name) {
    for (const auto& lemma : b.lemmas) {
      if (a.lemmas.count(lemma)) {
        throw MalformedLexiconLine(std::string(b_name), b.lines.at(lemma),
                                   "'" + lemma + "' appears in more than one marker list");
      }
    }
  };
  check_disjoint(stop, quant, kNegQuantifiersFile);
  check_disjoint(stop, adv, kNegAdverbsFile);
  check_disjoint(quant, adv, kNegAdverbsFile);
  lex.markers.stopwords = std::move(stop.lemmas);
  lex.markers.negative_quantifiers = std::move(quant.lemmas);
  lex.markers.negative_adverbs = std::move(adv.lemmas);
  return lex;
}

}  // namespace contra
