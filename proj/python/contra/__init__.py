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
"""Python bindings for the contradiction-detection core."""

import json as _json

from . import _core
from ._core import (
    FEATURE_NAMES,
    BaselineModel,
    ConfigError,
    Corpus,
    Error,
    Lexicons,
    RuleBase,
    classify,
    extract_features,
    f_measure,
    generate_synthetic,
    load_corpus,
    load_lexicons,
    load_model,
    load_rulebase,
    mine,
    run_cli,
    synthetic_lexicons,
    tune,
    validate_corpus,
)


def evaluate(corpus, rulebase, model, lexicons, mode="gold"):
    """Returns (report dict, formatted table)."""
    report, table = _core.evaluate(corpus, rulebase, model, lexicons, mode)
    return _json.loads(report), table


__all__ = [name for name in dir() if not name.startswith("_")]
