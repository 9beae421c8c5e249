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

#include "contra/mining.h"

#include <fnmatch.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "contra/error.h"
#include "json.hpp"

namespace contra {
namespace {

using ItemIds = std::vector<int>;

bool meets(std::size_t count, std::size_t total, double ratio) {
  return static_cast<double>(count) / static_cast<double>(total) >= ratio;
}

std::size_t count_support(const ItemIds& candidate, const std::vector<ItemIds>& transactions) {
  std::size_t n = 0;
  for (const ItemIds& tx : transactions) {
    if (std::includes(tx.begin(), tx.end(), candidate.begin(), candidate.end())) ++n;
  }
  return n;
}

// Joins (k-1)-itemsets sharing their first k-2 items; drops candidates with
// an infrequent (k-1)-subset.
std::vector<ItemIds> next_candidates(const std::vector<ItemIds>& level) {
  std::set<ItemIds> frequent(level.begin(), level.end());
  std::vector<ItemIds> out;
  for (std::size_t i = 0; i < level.size(); ++i) {
    for (std::size_t j = i + 1; j < level.size(); ++j) {
      const ItemIds& a = level[i];
      const ItemIds& b = level[j];
      if (!std::equal(a.begin(), a.end() - 1, b.begin(), b.end() - 1)) break;
      ItemIds candidate = a;
      candidate.push_back(b.back());
      bool closed = true;
      for (std::size_t drop = 0; drop + 2 < candidate.size() && closed; ++drop) {
        ItemIds subset;
        for (std::size_t k = 0; k < candidate.size(); ++k) {
          if (k != drop) subset.push_back(candidate[k]);
        }
        closed = frequent.count(subset) > 0;
      }
      if (closed) out.push_back(std::move(candidate));
    }
  }
  return out;
}

std::string category_or_null(const std::optional<Category>& c) {
  return c ? std::string(to_string(*c)) : std::string();
}

}  // namespace

void MiningParams::validate() const {
  if (!(min_support > 0.0 && min_support <= 1.0)) {
    throw OutOfRange("min_support must lie in (0, 1]");
  }
  if (!(min_confidence > 0.0 && min_confidence <= 1.0)) {
    throw OutOfRange("min_confidence must lie in (0, 1]");
  }
  if (max_antecedent_size < 1) throw OutOfRange("max_antecedent_size must be positive");
}

std::vector<FrequentItemset> mine_frequent_itemsets(const std::vector<Transaction>& transactions,
                                                    const MiningParams& params) {
  params.validate();
  if (transactions.empty()) throw EmptyCorpus("no transactions to mine");

  // Ids follow lexicographic order, so sorting ids sorts encodings.
  std::set<std::string> alphabet;
  for (const Transaction& tx : transactions) {
    alphabet.insert(tx.items.begin(), tx.items.end());
    alphabet.emplace(to_string(tx.label));
  }
  std::vector<std::string> names(alphabet.begin(), alphabet.end());
  std::map<std::string, int, std::less<>> ids;
  for (std::size_t i = 0; i < names.size(); ++i) ids.emplace(names[i], static_cast<int>(i));

  std::vector<ItemIds> encoded;
  encoded.reserve(transactions.size());
  for (const Transaction& tx : transactions) {
    ItemIds row;
    for (const std::string& item : tx.items) row.push_back(ids.at(item));
    row.push_back(ids.find(to_string(tx.label))->second);
    std::sort(row.begin(), row.end());
    encoded.push_back(std::move(row));
  }

  const std::size_t total = transactions.size();
  const std::size_t max_size = static_cast<std::size_t>(params.max_antecedent_size) + 1;
  std::vector<std::pair<ItemIds, std::size_t>> found;

  std::vector<std::size_t> singles(names.size(), 0);
  for (const ItemIds& row : encoded) {
    for (int id : row) ++singles[id];
  }
  std::vector<ItemIds> level;
  for (std::size_t id = 0; id < names.size(); ++id) {
    if (meets(singles[id], total, params.min_support)) {
      level.push_back({static_cast<int>(id)});
      found.emplace_back(level.back(), singles[id]);
    }
  }
  for (std::size_t size = 2; size <= max_size && !level.empty(); ++size) {
    std::vector<ItemIds> next;
    for (ItemIds& candidate : next_candidates(level)) {
      std::size_t count = count_support(candidate, encoded);
      if (meets(count, total, params.min_support)) {
        found.emplace_back(candidate, count);
        next.push_back(std::move(candidate));
      }
    }
    level = std::move(next);
  }

  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
    if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
    return a.first < b.first;
  });
  std::vector<FrequentItemset> out;
  out.reserve(found.size());
  for (const auto& [set, count] : found) {
    FrequentItemset fi;
    for (int id : set) fi.items.push_back(names[id]);
    fi.count = count;
    fi.support = static_cast<double>(count) / static_cast<double>(total);
    out.push_back(std::move(fi));
  }
  return out;
}

std::vector<AssociationRule> derive_rules(const std::vector<FrequentItemset>& itemsets,
                                          const std::vector<Transaction>& transactions,
                                          const MiningParams& params) {
  params.validate();
  std::map<std::vector<std::string>, std::size_t> counts;
  for (const FrequentItemset& fi : itemsets) counts.emplace(fi.items, fi.count);
  auto count_of = [&](const std::vector<std::string>& items) {
    if (auto it = counts.find(items); it != counts.end()) return it->second;
    std::size_t n = 0;
    for (const Transaction& tx : transactions) {
      if (std::all_of(items.begin(), items.end(),
                      [&](const std::string& i) { return tx.items.count(i) > 0; })) {
        ++n;
      }
    }
    return n;
  };

  std::vector<AssociationRule> rules;
  for (const FrequentItemset& fi : itemsets) {
    std::optional<TxLabel> label;
    int labels = 0;
    std::vector<std::string> antecedent;
    for (const std::string& item : fi.items) {
      if (auto l = parse_tx_label(item)) {
        label = l;
        ++labels;
      } else {
        antecedent.push_back(item);
      }
    }
    if (labels != 1 || antecedent.empty()) continue;
    std::size_t antecedent_count = count_of(antecedent);
    if (antecedent_count == 0) continue;
    double confidence = static_cast<double>(fi.count) / static_cast<double>(antecedent_count);
    if (confidence < params.min_confidence) continue;
    rules.push_back({std::move(antecedent), *label, fi.support, confidence, std::nullopt});
  }
  return rules;
}

CategoryMapping CategoryMapping::parse(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw MalformedMapping(std::string("mapping is not valid JSON: ") + e.what());
  }
  if (!j.is_array()) throw MalformedMapping("mapping must be a JSON list");
  CategoryMapping mapping;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const auto& e = j[i];
    std::string where = "mapping entry " + std::to_string(i);
    if (!e.is_object() || !e.contains("pattern") || !e.contains("category") ||
        !e["pattern"].is_string() || !e["category"].is_string()) {
      throw MalformedMapping(where + ": expected {\"pattern\": str, \"category\": str}");
    }
    Entry entry;
    entry.pattern = e["pattern"].get<std::string>();
    auto category = parse_category(e["category"].get<std::string>());
    if (!category) throw MalformedMapping(where + ": unknown category");
    entry.category = *category;
    const std::string& p = entry.pattern;
    auto open = p.find('(');
    entry.kind = p.substr(0, open);
    if (entry.kind != "DEP" && entry.kind != "SRLSIM" && entry.kind != "SENT" &&
        entry.kind != "POL") {
      throw MalformedMapping(where + ": unknown tuple kind '" + entry.kind + "'");
    }
    if (open != std::string::npos) {
      if (p.back() != ')') throw MalformedMapping(where + ": unbalanced parentheses");
      std::vector<std::string> fields;
      std::string body = p.substr(open + 1, p.size() - open - 2);
      std::stringstream ss(body);
      std::string field;
      while (std::getline(ss, field, ',')) fields.push_back(field);
      if (!body.empty() && body.back() == ',') fields.emplace_back();
      std::size_t arity = entry.kind == "DEP" || entry.kind == "SRLSIM" ? 3 : 2;
      if (fields.size() != arity) {
        throw MalformedMapping(where + ": " + entry.kind + " takes " + std::to_string(arity) +
                               " fields");
      }
      entry.fields = std::move(fields);
    }
    mapping.entries_.push_back(std::move(entry));
  }
  return mapping;
}

CategoryMapping CategoryMapping::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open mapping file '" + path.string() + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse(buffer.str());
}

bool CategoryMapping::matches(const Entry& entry, std::string_view encoding) {
  auto open = encoding.find('(');
  if (open == std::string_view::npos || encoding.substr(0, open) != entry.kind) return false;
  if (!entry.fields) return true;
  std::string body(encoding.substr(open + 1, encoding.size() - open - 2));
  std::vector<std::string> fields;
  std::stringstream ss(body);
  std::string field;
  while (std::getline(ss, field, ',')) fields.push_back(field);
  if (fields.size() != entry.fields->size()) return false;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (fnmatch((*entry.fields)[i].c_str(), fields[i].c_str(), 0) != 0) return false;
  }
  return true;
}

std::optional<Category> CategoryMapping::categorize(const std::vector<std::string>& antecedent,
                                                    bool strict) const {
  std::optional<Category> found;
  for (const Entry& entry : entries_) {
    bool hit = std::any_of(antecedent.begin(), antecedent.end(),
                           [&](const std::string& item) { return matches(entry, item); });
    if (!hit) continue;
    if (!found) {
      found = entry.category;
      if (!strict) break;
    } else if (*found != entry.category) {
      throw AmbiguousMapping("antecedent matches both " + std::string(to_string(*found)) +
                             " and " + std::string(to_string(entry.category)) + " patterns");
    }
  }
  return found;
}

RuleBase assign_categories(std::vector<AssociationRule> rules, const CategoryMapping& mapping,
                           const MiningParams& params, std::string provenance, bool strict) {
  RuleBase rb;
  rb.params = params;
  rb.provenance = std::move(provenance);
  for (AssociationRule& rule : rules) {
    rule.category = mapping.categorize(rule.antecedent, strict);
  }
  rb.rules = std::move(rules);
  return rb;
}

std::string corpus_fingerprint(const std::vector<Transaction>& transactions) {
  std::ostringstream dump;
  write_transactions(transactions, dump);
  std::uint64_t hash = 14695981039346656037ULL;
  for (unsigned char c : dump.str()) {
    hash ^= c;
    hash *= 1099511628211ULL;
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "fnv1a64:%016llx", static_cast<unsigned long long>(hash));
  return buf;
}

std::string format_rulebase(const RuleBase& rb) {
  nlohmann::ordered_json j;
  j["version"] = 1;
  j["params"] = {{"min_support", rb.params.min_support},
                 {"min_confidence", rb.params.min_confidence},
                 {"max_antecedent_size", rb.params.max_antecedent_size}};
  j["provenance"] = rb.provenance;
  j["rules"] = nlohmann::ordered_json::array();
  for (const AssociationRule& r : rb.rules) {
    nlohmann::ordered_json rj;
    rj["antecedent"] = r.antecedent;
    rj["consequent"] = to_string(r.consequent);
    rj["support"] = r.support;
    rj["confidence"] = r.confidence;
    rj["category"] = r.category ? nlohmann::ordered_json(category_or_null(r.category))
                                : nlohmann::ordered_json(nullptr);
    j["rules"].push_back(std::move(rj));
  }
  return j.dump(1) + "\n";
}

RuleBase parse_rulebase(std::string_view text) {
  using nlohmann::json;
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw MalformedRuleBaseFile(std::string("rulebase is not valid JSON: ") + e.what());
  }
  auto bad = [](const std::string& why) { return MalformedRuleBaseFile("rulebase: " + why); };
  if (!j.is_object()) throw bad("top level must be an object");
  if (!j.contains("version") || !j["version"].is_number_integer()) throw bad("missing version");
  if (j["version"].get<int>() != 1) {
    throw VersionMismatch("unsupported rulebase version " +
                          std::to_string(j["version"].get<int>()));
  }
  RuleBase rb;
  const json* params = j.contains("params") ? &j["params"] : nullptr;
  if (!params || !params->is_object()) throw bad("missing params object");
  try {
    rb.params.min_support = params->at("min_support").get<double>();
    rb.params.min_confidence = params->at("min_confidence").get<double>();
    rb.params.max_antecedent_size = params->at("max_antecedent_size").get<int>();
    rb.params.validate();
  } catch (const json::exception&) {
    throw bad("params need min_support, min_confidence, max_antecedent_size");
  } catch (const OutOfRange& e) {
    throw bad(e.what());
  }
  if (j.contains("provenance")) {
    if (!j["provenance"].is_string()) throw bad("provenance must be a string");
    rb.provenance = j["provenance"].get<std::string>();
  }
  if (!j.contains("rules") || !j["rules"].is_array()) throw bad("missing rules list");
  std::set<std::pair<std::vector<std::string>, TxLabel>> seen;
  for (std::size_t i = 0; i < j["rules"].size(); ++i) {
    const json& r = j["rules"][i];
    std::string where = "rule " + std::to_string(i) + ": ";
    if (!r.is_object()) throw bad(where + "must be an object");
    AssociationRule rule;
    if (!r.contains("antecedent") || !r["antecedent"].is_array() || r["antecedent"].empty()) {
      throw bad(where + "antecedent must be a non-empty list");
    }
    for (const json& item : r["antecedent"]) {
      if (!item.is_string() || !decode(item.get<std::string>())) {
        throw bad(where + "antecedent items must be canonical tuple encodings");
      }
      rule.antecedent.push_back(item.get<std::string>());
    }
    std::sort(rule.antecedent.begin(), rule.antecedent.end());
    if (std::adjacent_find(rule.antecedent.begin(), rule.antecedent.end()) !=
        rule.antecedent.end()) {
      throw bad(where + "duplicate antecedent item");
    }
    if (static_cast<int>(rule.antecedent.size()) > rb.params.max_antecedent_size) {
      throw bad(where + "antecedent exceeds max_antecedent_size");
    }
    auto consequent = r.contains("consequent") && r["consequent"].is_string()
                          ? parse_tx_label(r["consequent"].get<std::string>())
                          : std::nullopt;
    if (!consequent) throw bad(where + "consequent must be CONTRA or NOTCONTRA");
    rule.consequent = *consequent;
    for (auto [key, field] : {std::pair{"support", &rule.support},
                              std::pair{"confidence", &rule.confidence}}) {
      if (!r.contains(key) || !r[key].is_number()) throw bad(where + key + " must be a number");
      *field = r[key].get<double>();
      if (!(*field > 0.0 && *field <= 1.0)) throw bad(where + key + " must lie in (0, 1]");
    }
    if (r.contains("category") && !r["category"].is_null()) {
      auto c = r["category"].is_string() ? parse_category(r["category"].get<std::string>())
                                         : std::nullopt;
      if (!c) throw bad(where + "unknown category");
      rule.category = c;
    }
    if (!seen.emplace(rule.antecedent, rule.consequent).second) {
      throw bad(where + "duplicate rule");
    }
    rb.rules.push_back(std::move(rule));
  }
  return rb;
}

void save_rulebase(const RuleBase& rb, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write rulebase file '" + path.string() + "'");
  out << format_rulebase(rb);
}

RuleBase load_rulebase(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open rulebase file '" + path.string() + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_rulebase(buffer.str());
}

}  // namespace contra
