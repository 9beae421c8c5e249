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

// Precision, recall and F-measure for the contradiction class.

#ifndef CONTRA_METRICS_H_
#define CONTRA_METRICS_H_

#include <cstddef>

namespace contra {

// tp / (tp + fp); 0 when nothing was predicted positive.
inline double precision(std::size_t tp, std::size_t fp) {
  return tp + fp == 0 ? 0.0 : static_cast<double>(tp) / static_cast<double>(tp + fp);
}

// tp / (tp + fn); 0 when there are no gold positives.
inline double recall(std::size_t tp, std::size_t fn) {
  return tp + fn == 0 ? 0.0 : static_cast<double>(tp) / static_cast<double>(tp + fn);
}

// Harmonic mean 2PR / (P + R); 0 when P + R = 0.
inline double f_measure(double p, double r) {
  return p + r == 0.0 ? 0.0 : 2.0 * p * r / (p + r);
}

struct Counts {
  std::size_t tp = 0;
  std::size_t fp = 0;
  std::size_t fn = 0;

  void add(bool predicted, bool gold) {
    if (predicted && gold) ++tp;
    else if (predicted) ++fp;
    else if (gold) ++fn;
  }
  Counts& operator+=(const Counts& o) {
    tp += o.tp;
    fp += o.fp;
    fn += o.fn;
    return *this;
  }
  double precision() const { return contra::precision(tp, fp); }
  double recall() const { return contra::recall(tp, fn); }
  double f_measure() const { return contra::f_measure(precision(), recall()); }
  bool operator==(const Counts&) const = default;
};

}  // namespace contra

#endif  // CONTRA_METRICS_H_
