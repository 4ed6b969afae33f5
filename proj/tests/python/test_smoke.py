# Copyright 2026 The SRLScore Authors.
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

import json
import pathlib

import pytest

import srlscore

DATA = pathlib.Path(__file__).resolve().parents[1] / "data"


def load(name):
  return (DATA / name).read_text()


def test_extract_golden_tuple():
  db = srlscore.extract_tuples(load("mueller_gave.json"))
  assert db["tuples"][0]["roles"] == [
      "mueller", None, "gave", "a book", "mary", "yesterday", "in berlin"]


def test_extract_with_coref_expands():
  db = srlscore.extract_tuples(load("coref_writer.json"), coref=True)
  assert len(db["tuples"]) == 10


def test_validate_accepts_dict_and_rejects_bad_span():
  doc = json.loads(load("mueller_gave.json"))
  assert srlscore.validate_document(doc)["doc_id"] == "mueller-gave"
  with pytest.raises(srlscore.ValidationError, match="sentence 1"):
    srlscore.validate_document(load("bad_span.json"))
  with pytest.raises(srlscore.ParseError):
    srlscore.validate_document(load("malformed.json"))


def test_score_identity_and_static_mode():
  doc = load("mueller_gave.json")
  assert srlscore.score(doc, doc)["overall"] == 1.0
  static = srlscore.score(doc, doc, weighting="static")["overall"]
  assert static == pytest.approx(6 / 7)


def test_score_vector_requires_embeddings():
  doc = load("mueller_gave.json")
  with pytest.raises(srlscore.ConfigError):
    srlscore.score(doc, doc, similarity="vector")
  report = srlscore.score(doc, doc, similarity="vector",
                          embeddings=str(DATA / "embeddings.txt"))
  assert 0.0 <= report["overall"] <= 1.0
  with pytest.raises(srlscore.IoError):
    srlscore.score(doc, doc, similarity="vector", embeddings="/nonexistent")


def test_correlations():
  assert srlscore.pearson([1, 2, 3, 4], [1, 3, 2, 4]) == pytest.approx(
      0.8, abs=1e-12)
  assert srlscore.spearman([1, 2, 2, 3], [1, 2, 3, 4]) == pytest.approx(
      0.9 ** 0.5, abs=1e-12)
  with pytest.raises(srlscore.UndefinedCorrelationError):
    srlscore.pearson([1, 1, 1], [1, 2, 3])


def test_permutation_and_bonferroni():
  a = [0.1, 0.5, 0.2, 0.9]
  result = srlscore.permutation_test(a, a, [1, 3, 2, 4], iterations=100)
  assert result["p_value"] == 1.0
  assert result["seed"] == 256
  decisions = srlscore.bonferroni([0.004, 0.03], 0.05)
  assert decisions == [(0.025, True), (0.025, False)]
