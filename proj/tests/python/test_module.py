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
import os
import pathlib

import pytest

luxnorm = pytest.importorskip("luxnorm")

ROOT = pathlib.Path(__file__).resolve().parents[2]
EVAL = ROOT / "data" / "fixtures" / "eval"
SUITE = ROOT / "data" / "suite" / "mft_suite.tsv"


def test_tokenize_keeps_elided_article():
    tokens = luxnorm.tokenize("Wou ass d'Bischt fir ze kieren?")
    assert tokens == ["Wou", "ass", "d'Bischt", "fir", "ze", "kieren", "?"]
    assert luxnorm.detokenize(tokens) == "Wou ass d'Bischt fir ze kieren?"


def test_levenshtein():
    assert luxnorm.levenshtein("kitten", "sitting") == 3
    assert luxnorm.levenshtein("Mellech", "Mëllech") == 1


def test_dictionary_sampling_and_probability():
    d = luxnorm.VariantDictionary()
    d.add("Mëllech", "Mëllech", 80)
    d.add("Mëllech", "Mellech", 20)
    assert "Mëllech" in d and len(d) == 1
    assert d.probability("Mëllech", "Mellech") == (1, 5)
    draws = d.sample("Mëllech", seed=42, draws=10000)
    assert abs(draws.count("Mëllech") / 10000 - 0.8) <= 0.02
    assert draws == d.sample("Mëllech", seed=42, draws=10000)


def test_corrupt_and_synthesize_agree():
    d = luxnorm.VariantDictionary()
    d.add("Mëllech", "Mellech", 1)
    assert luxnorm.corrupt_sentence("Drénk Mëllech", d) == ("Drénk Mellech", 1)
    pairs, stats = luxnorm.synthesize(["Drénk Mëllech", "Moien"], d)
    assert pairs[0] == ("Drénk Mellech", "Drénk Mëllech", 1)
    assert stats["pair_count"] == 2


def test_pipeline_normalizer_and_evaluate():
    n = luxnorm.pipeline_normalizer(EVAL / "dictionary.tsv", EVAL / "lexicon.tsv")
    assert n.name == "pipeline"
    gold = luxnorm.read_lines(EVAL / "gold.txt")
    pairs, _ = luxnorm.synthesize(gold, EVAL / "dictionary.tsv", seed=42)
    original = [p[0] for p in pairs]
    predicted = n.normalize_batch(original, threads=2)
    assert len(predicted) == len(original)
    leave = luxnorm.evaluate(original, original, gold)["metrics"]
    assert leave["exact"]["err"] == "0" and leave["tp"] == 0 and leave["fp"] == 0
    perfect = luxnorm.evaluate(original, gold, gold)["metrics"]
    assert perfect["exact"]["err"] == "1" and perfect["exact"]["cer"] == "0"
    assert luxnorm.evaluate(original, predicted, gold)["metrics"]["err"] > 0


def test_evaluate_rejects_length_mismatch():
    with pytest.raises(luxnorm.InputError):
        luxnorm.evaluate(["a"], ["a", "b"], ["a"])


def test_align_marks_gaps_with_none():
    columns, score = luxnorm.align(["a", "b", "c"], ["a", "c"], ["a", "b", "c"])
    assert (None in columns[1]) and score > 0
    cols, pair_score = luxnorm.needleman_wunsch(["a", "b", "c"], ["a", "c"])
    assert cols[1] == ("b", None) and pair_score == 1.5


def test_checklist_with_names_and_callables():
    identity = luxnorm.run_checklist(SUITE, "identity")
    gold = luxnorm.run_checklist(SUITE, "gold")
    assert identity["units"] == 420 and identity["complete_suite"]
    for cell in identity["cells"]:
        expected = 0 if cell["setup"] == "CORRECT" else cell["units"]
        assert cell["successes"] == expected
    assert all(c["successes"] == c["units"] for c in gold["cells"])
    shout = luxnorm.run_checklist(SUITE, lambda s: s.upper())
    assert all(c["successes"] == 0 for c in shout["cells"] if c["setup"] == "PRESERVE")


def test_external_normalizer_protocol_error():
    with pytest.raises(luxnorm.ProtocolError):
        luxnorm.external_normalizer("head -n 1").normalize_batch(["a", "b"])


def test_run_is_deterministic(tmp_path):
    a = luxnorm.run(EVAL / "config.json", canonical=True, output_dir=str(tmp_path / "a"), threads=1)
    b = luxnorm.run(EVAL / "config.json", canonical=True, output_dir=str(tmp_path / "b"), threads=4)
    assert a == b
    assert a["timestamp"] is None
    assert a["config"]["seed"] == 42
    assert (tmp_path / "a" / "report.json").exists()


def test_run_rejects_unknown_key():
    with pytest.raises(luxnorm.ConfigError):
        luxnorm.run(EVAL / "config.json", colour="red")
