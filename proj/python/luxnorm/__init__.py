# Copyright 2026 The luxnorm Authors.
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
"""Luxembourgish spelling normalization toolkit.

Thin layer over the C++ core: JSON results are decoded into dicts and
sentence lists can be given as lists or as paths to one-sentence-per-line
files.
"""

import json
import os

from ._luxnorm import (
    ConfigError,
    InputError,
    LuxnormError,
    Normalizer,
    ProtocolError,
    VariantDictionary,
    __version__,
    align,
    canonical_form,
    corrupt_sentence,
    detokenize,
    external_normalizer,
    identity_normalizer,
    levenshtein,
    needleman_wunsch,
    pipeline_normalizer,
    tokenize,
)
from . import _luxnorm

__all__ = [
    "ConfigError", "InputError", "LuxnormError", "Normalizer", "ProtocolError",
    "VariantDictionary", "__version__", "align", "canonical_form", "corrupt_sentence",
    "detokenize", "evaluate", "external_normalizer", "identity_normalizer", "levenshtein",
    "needleman_wunsch", "pipeline_normalizer", "read_lines", "run", "run_checklist",
    "synthesize", "tokenize",
]


def read_lines(path):
    with open(path, encoding="utf-8") as f:
        return [line.rstrip("\n").rstrip("\r") for line in f]


def _lines(value):
    if isinstance(value, (str, os.PathLike)):
        return read_lines(value)
    return list(value)


def synthesize(lines, dictionary, seed=42, threads=None):
    """Noisy/standard pairs plus corpus statistics.

    Returns (pairs, stats) with pairs as (source, target, changed) tuples.
    """
    if not isinstance(dictionary, VariantDictionary):
        dictionary = VariantDictionary.load(dictionary)
    pairs, stats = _luxnorm.synthesize(_lines(lines), dictionary, seed, threads)
    return pairs, json.loads(stats)


def evaluate(original, predicted, gold, policy="fn", match_bonus=1.0, gap_penalty=-0.5,
             verbose=False, threads=None):
    """Aligns and scores predictions; undefined metrics come back as None."""
    return json.loads(_luxnorm._evaluate(_lines(original), _lines(predicted), _lines(gold),
                                         policy, match_bonus, gap_penalty, verbose, threads))


def run_checklist(suite, normalizer="identity", threads=None):
    """Runs the test suite with a Normalizer, a callable str -> str, or one
    of "identity", "gold", "cmd:<command>"."""
    return json.loads(_luxnorm._run_checklist(os.fspath(suite), normalizer, threads))


def run(config=None, canonical=False, **overrides):
    """Full experiment from a JSON config file and/or keyword overrides."""
    path = os.fspath(config) if config is not None else None
    return json.loads(_luxnorm._run_experiment(path, json.dumps(overrides), canonical))
