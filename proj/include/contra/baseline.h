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

// Weighted-feature baseline classifier and its simulated-annealing tuner.

#ifndef CONTRA_BASELINE_H_
#define CONTRA_BASELINE_H_

#include <array>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "contra/corpus.h"
#include "contra/features.h"
#include "contra/lexicons.h"

namespace contra {

enum class BinaryLabel { kContradiction, kNotContradiction };

std::string_view to_string(BinaryLabel label);

struct BaselineModel {
  std::array<double, FeatureVector::kSize> weights{};  // each in [-1, 1]
  double threshold = 0.5;                             // in [0, 1]

  // All weights 0.1, threshold 0.5.
  static BaselineModel initial();

  bool operator==(const BaselineModel&) const = default;
};

struct SaParams {
  int iterations = 5000;
  double initial_temperature = 1.0;
  double cooling_rate = 0.995;
  double step_size = 0.05;
  std::uint64_t seed = 0;

  // Throws OutOfRange when a field violates its bounds.
  void validate() const;
};

// clamp01(sum w_i * f_i'), where f_i' = 1 - f_i for the two similarity
// features so that larger always means more contradictory.
double score_pair(const BaselineModel& model, const FeatureVector& fv);

// CONTRADICTION iff score >= threshold.
BinaryLabel decide(const BaselineModel& model, double score);
BinaryLabel decide(const BaselineModel& model, const SentencePair& pair,
                   const Lexicons& lexicons);

// Contradiction-class F of the model over precomputed feature vectors.
double objective(const BaselineModel& model, std::span<const FeatureVector> features,
                 std::span<const bool> is_contradiction);

struct TuneStep {
  double current = 0.0;  // objective of the chain state after this iteration
  double best = 0.0;     // best objective seen so far
};

struct TuneResult {
  BaselineModel model;
  std::vector<TuneStep> history;
  double initial_objective = 0.0;
  double best_objective = 0.0;
};

// Single Metropolis chain over (weights, threshold). Each proposal moves one
// coordinate by N(0, step_size), clamped to its bounds; T_k = T0 * rate^k.
// Returns the best state ever visited. Throws DegenerateDevSet when the
// labels are single-class.
TuneResult tune(std::span<const FeatureVector> features, std::span<const bool> is_contradiction,
                const SaParams& params, const BaselineModel& start = BaselineModel::initial());
TuneResult tune(const Corpus& dev, const Lexicons& lexicons, const SaParams& params);

std::string format_model(const BaselineModel& model);
// Throws MalformedModelFile or VersionMismatch.
BaselineModel parse_model(std::string_view text);
void save_model(const BaselineModel& model, const std::filesystem::path& path);
BaselineModel load_model(const std::filesystem::path& path);

}  // namespace contra

#endif  // CONTRA_BASELINE_H_
