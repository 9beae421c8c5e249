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

// Corpus-level precision/recall/F reports, per category and overall.

#ifndef CONTRA_EVALUATION_H_
#define CONTRA_EVALUATION_H_

#include <array>
#include <cstddef>
#include <string>

#include "contra/corpus.h"
#include "contra/matchers.h"
#include "contra/metrics.h"

namespace contra {

struct SliceScores {
  Counts counts;
  double precision = 0.0;
  double recall = 0.0;
  double f_measure = 0.0;
  // Set when the ratio's denominator was zero and 0 was reported instead.
  bool precision_undefined = false;
  bool recall_undefined = false;

  static SliceScores from(const Counts& c);
};

struct MacroScores {
  double precision = 0.0;
  double recall = 0.0;
  double f_measure = 0.0;  // mean of the per-category F values
};

struct Report {
  DetectMode mode = DetectMode::kVoting;
  std::size_t n_pairs = 0;
  std::array<SliceScores, 5> per_category;  // indexed like kAllCategories
  SliceScores overall;
  MacroScores macro_average;

  const SliceScores& at(Category c) const { return per_category[static_cast<int>(c)]; }
};

// Unweighted mean over the five category slices.
MacroScores macro_average(const std::array<SliceScores, 5>& slices);

Report build_report(DetectMode mode, std::size_t n_pairs,
                    const std::array<Counts, 5>& per_category, const Counts& overall);

// GOLD_CATEGORY: each category slice holds that category's gold pairs plus
// every non-contradiction pair, all run through that category's detector;
// overall pools the five slices. CLASSIFIED / VOTING: pairs are sliced by
// the predicted category and overall counts each pair once. Throws
// EmptyCorpus, or MissingGoldCategory for an uncategorized contradiction in
// GOLD_CATEGORY mode.
Report evaluate(const Corpus& test, const Detector& detector, DetectMode mode);

std::string format_report_json(const Report& report);
// Aligned table: category, P, R, F (percent) plus counts, an Average row and
// an Overall row.
std::string format_report_table(const Report& report);

}  // namespace contra

#endif  // CONTRA_EVALUATION_H_
