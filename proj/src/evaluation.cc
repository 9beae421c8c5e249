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

#include "contra/evaluation.h"

#include <cstdio>
#include <sstream>

#include "contra/error.h"
#include "json.hpp"

namespace contra {
namespace {

int index_of(Category c) { return static_cast<int>(c); }

nlohmann::ordered_json slice_json(const SliceScores& s) {
  nlohmann::ordered_json j;
  j["precision"] = s.precision;
  j["recall"] = s.recall;
  j["f_measure"] = s.f_measure;
  j["tp"] = s.counts.tp;
  j["fp"] = s.counts.fp;
  j["fn"] = s.counts.fn;
  j["precision_undefined"] = s.precision_undefined;
  j["recall_undefined"] = s.recall_undefined;
  return j;
}

std::string row(std::string_view name, double p, double r, double f) {
  char buf[128];
  std::snprintf(buf, sizeof buf, "%-12s %7.2f %7.2f %7.2f", std::string(name).c_str(),
                100.0 * p, 100.0 * r, 100.0 * f);
  return buf;
}

}  // namespace

SliceScores SliceScores::from(const Counts& c) {
  SliceScores s;
  s.counts = c;
  s.precision = c.precision();
  s.recall = c.recall();
  s.f_measure = contra::f_measure(s.precision, s.recall);
  s.precision_undefined = c.tp + c.fp == 0;
  s.recall_undefined = c.tp + c.fn == 0;
  return s;
}

MacroScores macro_average(const std::array<SliceScores, 5>& slices) {
  MacroScores m;
  for (const SliceScores& s : slices) {
    m.precision += s.precision;
    m.recall += s.recall;
    m.f_measure += s.f_measure;
  }
  m.precision /= 5.0;
  m.recall /= 5.0;
  m.f_measure /= 5.0;
  return m;
}

Report build_report(DetectMode mode, std::size_t n_pairs,
                    const std::array<Counts, 5>& per_category, const Counts& overall) {
  Report r;
  r.mode = mode;
  r.n_pairs = n_pairs;
  for (std::size_t i = 0; i < per_category.size(); ++i) {
    r.per_category[i] = SliceScores::from(per_category[i]);
  }
  r.overall = SliceScores::from(overall);
  r.macro_average = macro_average(r.per_category);
  return r;
}

Report evaluate(const Corpus& test, const Detector& detector, DetectMode mode) {
  if (test.empty()) throw EmptyCorpus("test corpus is empty");
  std::array<Counts, 5> slices{};
  Counts overall;
  for (const SentencePair& pair : test.pairs) {
    const bool gold = pair.is_contradiction();
    if (mode == DetectMode::kGoldCategory) {
      if (gold) {
        Verdict v = detector.detect(pair, mode);
        slices[index_of(*pair.category)].add(v.label == BinaryLabel::kContradiction, true);
      } else {
        for (Category c : kAllCategories) {
          Verdict v = detector.detect_as(pair, c, mode);
          slices[index_of(c)].add(v.label == BinaryLabel::kContradiction, false);
        }
      }
      continue;
    }
    Verdict v = detector.detect(pair, mode);
    const bool predicted = v.label == BinaryLabel::kContradiction;
    overall.add(predicted, gold);
    if (v.category) slices[index_of(*v.category)].add(predicted, gold);
  }
  if (mode == DetectMode::kGoldCategory) {
    for (const Counts& c : slices) overall += c;
  }
  return build_report(mode, test.size(), slices, overall);
}

std::string format_report_json(const Report& report) {
  nlohmann::ordered_json j;
  j["mode"] = to_string(report.mode);
  j["n_pairs"] = report.n_pairs;
  nlohmann::ordered_json per = nlohmann::ordered_json::object();
  for (Category c : kAllCategories) per[std::string(to_string(c))] = slice_json(report.at(c));
  j["per_category"] = std::move(per);
  j["macro_average"] = {{"precision", report.macro_average.precision},
                        {"recall", report.macro_average.recall},
                        {"f_measure", report.macro_average.f_measure}};
  j["overall"] = slice_json(report.overall);
  return j.dump(2) + "\n";
}

std::string format_report_table(const Report& report) {
  std::ostringstream out;
  out << "mode: " << to_string(report.mode) << "  pairs: " << report.n_pairs << "\n";
  char header[128];
  std::snprintf(header, sizeof header, "%-12s %7s %7s %7s %6s %6s %6s", "category", "P", "R",
                "F", "tp", "fp", "fn");
  out << header << "\n";
  for (Category c : kAllCategories) {
    const SliceScores& s = report.at(c);
    char counts[64];
    std::snprintf(counts, sizeof counts, " %6zu %6zu %6zu", s.counts.tp, s.counts.fp, s.counts.fn);
    out << row(to_string(c), s.precision, s.recall, s.f_measure) << counts
        << (s.precision_undefined ? "  (P undefined)" : "") << "\n";
  }
  const MacroScores& m = report.macro_average;
  out << row("Average", m.precision, m.recall, m.f_measure) << "\n";
  const SliceScores& o = report.overall;
  char counts[64];
  std::snprintf(counts, sizeof counts, " %6zu %6zu %6zu", o.counts.tp, o.counts.fp, o.counts.fn);
  out << row("Overall", o.precision, o.recall, o.f_measure) << counts << "\n";
  return out.str();
}

}  // namespace contra
