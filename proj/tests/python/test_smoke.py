# Copyright 2026 The Contra Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Smoke tests for the Python bindings."""

import json
import os
import pathlib

import pytest

import contra

DATA = pathlib.Path(os.environ.get("CONTRA_DATA_DIR", pathlib.Path(__file__).parents[2] / "data"))
FIXTURES = pathlib.Path(__file__).parents[1] / "fixtures"
MAPPING = str(DATA / "category_mapping.json")


@pytest.fixture(scope="module")
def pipeline():
    corpus = contra.generate_synthetic(per_category=40, noise=80, seed=42)
    dev, test = corpus.split(0.7, 42)
    lexicons = contra.load_lexicons(str(DATA / "lexicons"))
    rulebase = contra.mine(dev, lexicons, MAPPING)
    return dev, test, lexicons, rulebase


def test_synthetic_corpus_is_seeded():
    a = contra.generate_synthetic(per_category=5, noise=5, seed=7)
    b = contra.generate_synthetic(per_category=5, noise=5, seed=7)
    assert len(a) == 30
    assert a.ids == b.ids
    assert a.to_jsonl() == b.to_jsonl()


def test_corpus_round_trip(tmp_path):
    corpus = contra.generate_synthetic(per_category=3, noise=3, seed=1)
    path = tmp_path / "c.jsonl"
    corpus.save(str(path))
    assert contra.load_corpus(str(path)).to_jsonl() == corpus.to_jsonl()


def test_validation_and_errors():
    assert contra.validate_corpus(str(FIXTURES / "corpus_valid.jsonl")) == []
    (line, _message), = contra.validate_corpus(str(FIXTURES / "corpus_malformed_line7.jsonl"))
    assert line == 7
    with pytest.raises(contra.ConfigError):
        contra.load_corpus(str(FIXTURES / "absent.jsonl"))
    with pytest.raises(contra.Error):
        contra.load_rulebase(str(FIXTURES / "rulebase_bad_confidence.json"))


def test_features_shape():
    corpus = contra.generate_synthetic(per_category=2, noise=2, seed=3)
    rows = contra.extract_features(corpus, contra.synthetic_lexicons())
    assert len(rows) == len(corpus)
    assert all(len(r) == len(contra.FEATURE_NAMES) == 10 for r in rows)
    assert all(0.0 <= v <= 1.0 for r in rows for v in r)


def test_mine_and_evaluate(pipeline):
    dev, test, lexicons, rulebase = pipeline
    assert len(rulebase) > 0
    rules = json.loads(rulebase.to_json())["rules"]
    assert any(r["antecedent"] == ["POL(V1-POS,V2-NEG)"] and r["category"] == "NEGATION"
               for r in rules)
    model = contra.tune(dev, lexicons, iterations=300, seed=42)
    assert model.to_json() == contra.tune(dev, lexicons, iterations=300, seed=42).to_json()
    report, table = contra.evaluate(test, rulebase, model, lexicons, mode="gold")
    assert report["per_category"]["NEGATION"]["f_measure"] >= 0.95
    assert "Average" in table
    verdicts = [json.loads(v) for v in contra.classify(test, rulebase, model, lexicons)]
    assert len(verdicts) == len(test)
    assert {v["mode"] for v in verdicts} == {"VOTING"}


def test_model_files(tmp_path):
    model = contra.BaselineModel.initial()
    assert model.weights == [0.1] * 10
    assert model.threshold == 0.5
    path = tmp_path / "m.json"
    model.save(str(path))
    assert contra.load_model(str(path)).to_json() == model.to_json()


def test_f_measure():
    assert contra.f_measure(0.5, 0.5) == 0.5
    assert contra.f_measure(0.0, 0.0) == 0.0
    assert abs(contra.f_measure(0.928, 0.857) - 0.891) < 5e-4


def test_run_cli_exit_codes():
    code, _out, err = contra.run_cli(["validate", "--corpus",
                                      str(FIXTURES / "corpus_malformed_line7.jsonl")])
    assert code == 1
    assert ":7:" in err
    code, _out, _err = contra.run_cli(["classify", "--corpus", "x.jsonl"])
    assert code == 2


def test_bad_mode(pipeline):
    _dev, test, lexicons, rulebase = pipeline
    with pytest.raises(contra.ConfigError):
        contra.classify(test, rulebase, contra.BaselineModel.initial(), lexicons, mode="poll")
