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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <string>
#include <vector>

#include "contra/baseline.h"
#include "contra/cli.h"
#include "contra/corpus.h"
#include "contra/error.h"
#include "contra/evaluation.h"
#include "contra/features.h"
#include "contra/lexicons.h"
#include "contra/matchers.h"
#include "contra/metrics.h"
#include "contra/mining.h"
#include "contra/synthetic.h"
#include "contra/tuples.h"

namespace py = pybind11;

namespace contra {
namespace {

DetectMode mode_from(const std::string& s) {
  auto m = parse_detect_mode(s);
  if (!m) throw ConfigError("unknown mode '" + s + "' (gold|classify|vote)");
  return *m;
}

RuleBase mine(const Corpus& dev, const Lexicons& lexicons, const std::string& mapping_path,
              double min_support, double min_confidence, int max_antecedent, bool strict) {
  MiningParams params{min_support, min_confidence, max_antecedent};
  params.validate();
  CategoryMapping mapping = CategoryMapping::load(mapping_path);
  std::vector<Transaction> txs = extract_transactions(dev, lexicons);
  auto rules = derive_rules(mine_frequent_itemsets(txs, params), txs, params);
  return assign_categories(std::move(rules), mapping, params, corpus_fingerprint(txs), strict);
}

py::tuple run(const std::vector<std::string>& args) {
  std::vector<const char*> argv{"contra"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return py::make_tuple(code, out.str(), err.str());
}

}  // namespace
}  // namespace contra

PYBIND11_MODULE(_core, m) {
  using namespace contra;
  m.doc() = "Rule-based contradiction detection core";

  auto error = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<ConfigError>(m, "ConfigError", error.ptr());

  py::class_<Corpus>(m, "Corpus")
      .def("__len__", [](const Corpus& c) { return c.pairs.size(); })
      .def_property_readonly("ids",
                             [](const Corpus& c) {
                               std::vector<std::string> ids;
                               for (const auto& p : c.pairs) ids.push_back(p.id);
                               return ids;
                             })
      .def_readonly("provenance", &Corpus::provenance)
      .def("to_jsonl",
           [](const Corpus& c) {
             std::ostringstream out;
             write_corpus(c, out);
             return out.str();
           })
      .def("save", [](const Corpus& c, const std::string& path) { save_corpus(c, path); })
      .def("split", &split_corpus, py::arg("dev_fraction"), py::arg("seed"));

  m.def("load_corpus",
        [](const std::string& path, bool strict) { return load_corpus(path, {strict, {}}); },
        py::arg("path"), py::arg("strict") = false);
  m.def(
      "validate_corpus",
      [](const std::string& path, bool strict) {
        std::vector<std::pair<std::size_t, std::string>> out;
        for (const Diagnostic& d : validate_corpus_file(path, {strict, {}})) {
          out.emplace_back(d.line, d.message);
        }
        return out;
      },
      py::arg("path"), py::arg("strict") = false);
  m.def(
      "generate_synthetic",
      [](int per_category, int noise, std::uint64_t seed) {
        SyntheticSpec spec;
        for (Category c : kAllCategories) spec[c] = per_category;
        spec.noise = noise;
        return generate_synthetic_corpus(spec, seed);
      },
      py::arg("per_category") = 200, py::arg("noise") = 400, py::arg("seed") = 0);

  py::class_<Lexicons>(m, "Lexicons");
  m.def("load_lexicons", [](const std::string& dir) { return load_lexicons(dir); });
  m.def("synthetic_lexicons", &synthetic_lexicons);

  m.def(
      "extract_features",
      [](const Corpus& c, const Lexicons& lex) {
        std::vector<std::vector<double>> rows;
        for (const auto& p : c.pairs) {
          auto v = extract_feature_vector(p, lex).values();
          rows.emplace_back(v.begin(), v.end());
        }
        return rows;
      },
      py::arg("corpus"), py::arg("lexicons"));
  m.attr("FEATURE_NAMES") = [] {
    std::vector<std::string> names(FeatureVector::kNames.begin(), FeatureVector::kNames.end());
    return names;
  }();

  py::class_<RuleBase>(m, "RuleBase")
      .def("__len__", [](const RuleBase& rb) { return rb.rules.size(); })
      .def("to_json", &format_rulebase)
      .def("save", [](const RuleBase& rb, const std::string& path) { save_rulebase(rb, path); });
  m.def("load_rulebase", [](const std::string& path) { return load_rulebase(path); });
  m.def("mine", &mine, py::arg("dev"), py::arg("lexicons"), py::arg("mapping"),
        py::arg("min_support") = 0.05, py::arg("min_confidence") = 0.7,
        py::arg("max_antecedent") = 3, py::arg("strict") = false);

  py::class_<BaselineModel>(m, "BaselineModel")
      .def_static("initial", &BaselineModel::initial)
      .def_property_readonly("weights",
                             [](const BaselineModel& b) {
                               return std::vector<double>(b.weights.begin(), b.weights.end());
                             })
      .def_readonly("threshold", &BaselineModel::threshold)
      .def("to_json", &format_model)
      .def("save", [](const BaselineModel& b, const std::string& path) { save_model(b, path); });
  m.def("load_model", [](const std::string& path) { return load_model(path); });
  m.def(
      "tune",
      [](const Corpus& dev, const Lexicons& lex, int iterations, double temperature,
         double cooling, double step, std::uint64_t seed) {
        SaParams params{iterations, temperature, cooling, step, seed};
        params.validate();
        return tune(dev, lex, params).model;
      },
      py::arg("dev"), py::arg("lexicons"), py::arg("iterations") = 5000,
      py::arg("temperature") = 1.0, py::arg("cooling") = 0.995, py::arg("step") = 0.05,
      py::arg("seed") = 0);

  m.def(
      "classify",
      [](const Corpus& c, const RuleBase& rb, const BaselineModel& model, const Lexicons& lex,
         const std::string& mode) {
        Detector detector(rb, model, lex);
        DetectMode dm = mode_from(mode);
        std::vector<std::string> lines;
        for (const auto& p : c.pairs) lines.push_back(format_verdict(detector.detect(p, dm)));
        return lines;
      },
      py::arg("corpus"), py::arg("rulebase"), py::arg("model"), py::arg("lexicons"),
      py::arg("mode") = "vote");
  m.def(
      "evaluate",
      [](const Corpus& c, const RuleBase& rb, const BaselineModel& model, const Lexicons& lex,
         const std::string& mode) {
        Report report = evaluate(c, Detector(rb, model, lex), mode_from(mode));
        return py::make_tuple(format_report_json(report), format_report_table(report));
      },
      py::arg("corpus"), py::arg("rulebase"), py::arg("model"), py::arg("lexicons"),
      py::arg("mode") = "gold");

  m.def("f_measure", &f_measure, py::arg("precision"), py::arg("recall"));
  m.def("run_cli", &run, py::arg("args"),
        "Runs the command-line front end in-process; returns (exit_code, stdout, stderr).");
}
