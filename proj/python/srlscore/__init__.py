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

"""Reference-free factual consistency scoring over semantic-role tuples.

Documents are annotated JSON in the interchange format, given either as JSON
text or as an already decoded ``dict``.
"""

import json as _json

from srlscore import _srlscore
from srlscore._srlscore import (
    ConfigError,
    IoError,
    ParseError,
    UndefinedCorrelationError,
    ValidationError,
)

__all__ = [
    "ConfigError",
    "IoError",
    "ParseError",
    "UndefinedCorrelationError",
    "ValidationError",
    "bonferroni",
    "extract_tuples",
    "pearson",
    "permutation_test",
    "score",
    "spearman",
    "validate_document",
]


def _text(document):
  return document if isinstance(document, str) else _json.dumps(document)


def validate_document(document):
  """Returns the normalized document dict; raises ValidationError/ParseError."""
  return _json.loads(_srlscore.validate_document(_text(document)))


def extract_tuples(document, variant="full", coref=False, coref_cap=64):
  """Fact tuple database of one document."""
  return _json.loads(
      _srlscore.extract_tuples(_text(document), variant, coref, coref_cap))


def score(source, summary, similarity="exact", weighting="dynamic",
          variant="full", weights=None, coref=False, coref_cap=64,
          embeddings=None, jobs=1):
  """Scores `summary` against `source`; returns the report as a dict."""
  return _json.loads(
      _srlscore.score(_text(source), _text(summary), similarity, weighting,
                      variant, None if weights is None else list(weights),
                      coref, coref_cap, embeddings, jobs))


def pearson(x, y):
  return _srlscore.pearson(list(x), list(y))


def spearman(x, y):
  return _srlscore.spearman(list(x), list(y))


def permutation_test(metric_a, metric_b, human, stat="pearson",
                     iterations=10000, seed=256, jobs=1):
  """Paired-swap permutation test on the correlation difference."""
  return _json.loads(
      _srlscore.permutation_test(list(metric_a), list(metric_b), list(human),
                                 stat, iterations, seed, jobs))


def bonferroni(p_values, alpha=0.05):
  """List of (adjusted_alpha, significant) per p-value."""
  return _srlscore.bonferroni(list(p_values), alpha)
