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

#include "contra/baseline.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <memory>
#include <random>
#include <sstream>

#include "contra/error.h"
#include "contra/metrics.h"
#include "json.hpp"

namespace contra {

std::string_view to_string(BinaryLabel label) {
  return label == BinaryLabel::kContradiction ? "CONTRADICTION" : "NOT_CONTRADICTION";
}

BaselineModel BaselineModel::initial() {
  BaselineModel m;
  m.weights.fill(0.1);
  m.threshold = 0.5;
  return m;
}

void SaParams::validate() const {
  if (iterations < 0) throw OutOfRange("iterations must be non-negative");
  if (!(initial_temperature > 0.0)) throw OutOfRange("initial temperature must be positive");
  if (!(cooling_rate > 0.0 && cooling_rate < 1.0)) {
    throw OutOfRange("cooling rate must lie in (0, 1)");
  }
  if (!(step_size > 0.0)) throw OutOfRange("step size must be positive");
}

double score_pair(const BaselineModel& model, const FeatureVector& fv) {
  auto values = fv.values();
  double sum = 0.0;
  for (std::size_t i = 0; i < FeatureVector::kSize; ++i) {
    double v = FeatureVector::kIsSimilarity[i] ? 1.0 - values[i] : values[i];
    sum += model.weights[i] * v;
  }
  return std::clamp(sum, 0.0, 1.0);
}

BinaryLabel decide(const BaselineModel& model, double score) {
  return score >= model.threshold ? BinaryLabel::kContradiction
                                  : BinaryLabel::kNotContradiction;
}

BinaryLabel decide(const BaselineModel& model, const SentencePair& pair,
                   const Lexicons& lexicons) {
  return decide(model, score_pair(model, extract_feature_vector(pair, lexicons)));
}

double objective(const BaselineModel& model, std::span<const FeatureVector> features,
                 std::span<const bool> is_contradiction) {
  Counts counts;
  for (std::size_t i = 0; i < features.size(); ++i) {
    bool predicted = decide(model, score_pair(model, features[i])) == BinaryLabel::kContradiction;
    counts.add(predicted, is_contradiction[i]);
  }
  return counts.f_measure();
}

TuneResult tune(std::span<const FeatureVector> features, std::span<const bool> is_contradiction,
                const SaParams& params, const BaselineModel& start) {
  params.validate();
  const bool any_pos = std::find(is_contradiction.begin(), is_contradiction.end(), true) !=
                       is_contradiction.end();
  const bool any_neg = std::find(is_contradiction.begin(), is_contradiction.end(), false) !=
                       is_contradiction.end();
  if (!any_pos || !any_neg) {
    throw DegenerateDevSet("development set needs both contradiction and other pairs");
  }

  std::mt19937_64 rng(params.seed);
  std::uniform_int_distribution<std::size_t> pick(0, FeatureVector::kSize);
  std::normal_distribution<double> step(0.0, params.step_size);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  TuneResult result;
  BaselineModel current = start;
  double current_f = objective(current, features, is_contradiction);
  result.model = current;
  result.initial_objective = current_f;
  result.best_objective = current_f;
  result.history.reserve(static_cast<std::size_t>(params.iterations));

  double temperature = params.initial_temperature;
  for (int k = 0; k < params.iterations; ++k) {
    BaselineModel proposal = current;
    std::size_t coord = pick(rng);
    if (coord == FeatureVector::kSize) {
      proposal.threshold = std::clamp(proposal.threshold + step(rng), 0.0, 1.0);
    } else {
      proposal.weights[coord] = std::clamp(proposal.weights[coord] + step(rng), -1.0, 1.0);
    }
    double proposal_f = objective(proposal, features, is_contradiction);
    double delta = proposal_f - current_f;
    // Always draw so the random stream does not depend on acceptance history.
    double u = unit(rng);
    if (delta >= 0.0 || u < std::exp(delta / temperature)) {
      current = proposal;
      current_f = proposal_f;
    }
    if (current_f > result.best_objective) {
      result.best_objective = current_f;
      result.model = current;
    }
    result.history.push_back({current_f, result.best_objective});
    temperature *= params.cooling_rate;
  }
  return result;
}

TuneResult tune(const Corpus& dev, const Lexicons& lexicons, const SaParams& params) {
  if (dev.empty()) throw EmptyCorpus("development corpus is empty");
  std::vector<FeatureVector> features;
  features.reserve(dev.size());
  // std::vector<bool> is not contiguous, so labels live in a plain array.
  auto labels = std::make_unique<bool[]>(dev.size());
  for (std::size_t i = 0; i < dev.size(); ++i) {
    features.push_back(extract_feature_vector(dev.pairs[i], lexicons));
    labels[i] = dev.pairs[i].is_contradiction();
  }
  return tune(features, std::span<const bool>(labels.get(), dev.size()), params);
}

std::string format_model(const BaselineModel& model) {
  nlohmann::ordered_json j;
  j["version"] = 1;
  j["weights"] = model.weights;
  j["threshold"] = model.threshold;
  return j.dump(2) + "\n";
}

BaselineModel parse_model(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw MalformedModelFile(std::string("model file is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw MalformedModelFile("model file must hold a JSON object");
  auto version = j.find("version");
  if (version == j.end() || !version->is_number_integer()) {
    throw MalformedModelFile("model file lacks an integer 'version'");
  }
  if (version->get<int>() != 1) {
    throw VersionMismatch("unsupported model version " + std::to_string(version->get<int>()));
  }
  auto weights = j.find("weights");
  if (weights == j.end() || !weights->is_array() || weights->size() != FeatureVector::kSize) {
    throw MalformedModelFile("'weights' must be an array of 10 numbers");
  }
  BaselineModel model;
  for (std::size_t i = 0; i < FeatureVector::kSize; ++i) {
    const auto& w = (*weights)[i];
    if (!w.is_number()) throw MalformedModelFile("weights must be numbers");
    double v = w.get<double>();
    if (!std::isfinite(v) || v < -1.0 || v > 1.0) {
      throw MalformedModelFile("weight " + std::to_string(i) + " outside [-1, 1]");
    }
    model.weights[i] = v;
  }
  auto threshold = j.find("threshold");
  if (threshold == j.end() || !threshold->is_number()) {
    throw MalformedModelFile("model file lacks a numeric 'threshold'");
  }
  model.threshold = threshold->get<double>();
  if (!std::isfinite(model.threshold) || model.threshold < 0.0 || model.threshold > 1.0) {
    throw MalformedModelFile("threshold outside [0, 1]");
  }
  return model;
}

void save_model(const BaselineModel& model, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write model file '" + path.string() + "'");
  out << format_model(model);
}

BaselineModel load_model(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open model file '" + path.string() + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_model(buffer.str());
}

}  // namespace contra
