# Copyright 2022 The ff_sentiment Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     https://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""A dictionary-based fallback scorer for items that carry only text."""

import dataclasses
import re

_URL = re.compile(r"(?:https?://|www\.)\S+")
_TOKEN = re.compile(r"\$[a-z0-9]+|[a-z0-9]+")


@dataclasses.dataclass(frozen=True)
class Lexicon:
    """Positive and negative word lists.

    Args:
        positive: iterable of positive terms.
        negative: iterable of negative terms.

    Both lists are stored lowercase and must not share a term.
    """

    positive: frozenset
    negative: frozenset

    def __post_init__(self):
        positive = frozenset(term.strip().lower() for term in self.positive)
        negative = frozenset(term.strip().lower() for term in self.negative)
        overlap = positive & negative
        if overlap:
            raise ValueError(
                "Lexicon word lists must be disjoint. "
                f"Got terms in both lists: {sorted(overlap)}"
            )
        object.__setattr__(self, "positive", positive - {""})
        object.__setattr__(self, "negative", negative - {""})

    def get_config(self):
        return {"positive": sorted(self.positive), "negative": sorted(self.negative)}

    @classmethod
    def from_config(cls, config):
        return cls(**config)


def normalize_text(text):
    """Lowercases `text` and splits it into tokens.

    Hyperlinks are removed, every character other than letters, digits and the
    cashtag `$` separates tokens, and `$`-prefixed cashtags are kept whole.
    """
    text = _URL.sub(" ", str(text).lower())
    return _TOKEN.findall(text)


def lexicon_score(text, lexicon):
    """Scores `text` by counting lexicon hits.

    Usage:

    ```python
    lexicon = Lexicon(positive={"strong", "gains"}, negative={"loss"})
    lexicon_score("strong gains today", lexicon)
    # (0.666..., 0.333..., 0.0)
    ```

    Returns:
        a `(p_pos, p_neu, p_neg)` tuple of token shares.
    """
    tokens = normalize_text(text)
    if not tokens:
        raise ValueError(
            f"Cannot score text with zero tokens after normalization. Got text={text!r}"
        )
    n = len(tokens)
    positive = sum(token in lexicon.positive for token in tokens)
    negative = sum(token in lexicon.negative for token in tokens)
    p_pos = positive / n
    p_neg = negative / n
    return p_pos, 1.0 - p_pos - p_neg, p_neg


def _read_terms(path):
    with open(path, encoding="utf-8") as stream:
        return [line.strip() for line in stream if line.strip()]


def load_lexicon(positive_path, negative_path):
    """Loads a `Lexicon` from two plain-text word lists, one term per line."""
    return Lexicon(
        positive=_read_terms(positive_path), negative=_read_terms(negative_path)
    )


DEFAULT_LEXICON = Lexicon(
    positive=(
        "beat",
        "beats",
        "bullish",
        "gain",
        "gains",
        "growth",
        "high",
        "improve",
        "improved",
        "optimistic",
        "outperform",
        "profit",
        "rally",
        "record",
        "rise",
        "rises",
        "strong",
        "surge",
        "upgrade",
        "win",
    ),
    negative=(
        "bearish",
        "cut",
        "decline",
        "default",
        "downgrade",
        "drop",
        "fall",
        "falls",
        "fear",
        "inflation",
        "loss",
        "losses",
        "miss",
        "plunge",
        "recession",
        "risk",
        "selloff",
        "slump",
        "weak",
        "worst",
    ),
)
