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
"""Scored text items and their item-level sentiment score."""

import dataclasses

import numpy as np
import pandas as pd
from absl import logging

from ff_sentiment.panel.columns import ITEMS
from ff_sentiment.sentiment import lexicon as lexicon_lib
from ff_sentiment.utils import table_io
from ff_sentiment.utils.table_io import SchemaError

NEWS = "news"
SOCIAL = "social"
OTHER = "other"
TAGS = (NEWS, SOCIAL, OTHER)

ORIGIN_TAGS = {
    "reuters": NEWS,
    "bloomberg": NEWS,
    "wsj": NEWS,
    "twitter": SOCIAL,
    "reddit": SOCIAL,
}

PROBABILITY_TOLERANCE = 1e-6


def _validate_probabilities(p_pos, p_neu, p_neg):
    for name, value in (("p_pos", p_pos), ("p_neu", p_neu), ("p_neg", p_neg)):
        if not 0.0 <= value <= 1.0:
            raise ValueError(f"`{name}` should be in [0, 1]. Got {name}={value}")
    total = p_pos + p_neu + p_neg
    if abs(total - 1.0) > PROBABILITY_TOLERANCE:
        raise ValueError(
            "Class probabilities should sum to 1 within "
            f"{PROBABILITY_TOLERANCE}. Got p_pos + p_neu + p_neg = {total}"
        )


def score_item(p_pos, p_neu, p_neg):
    """Maps class probabilities to a continuous score `p_pos - p_neg`."""
    _validate_probabilities(p_pos, p_neu, p_neg)
    return p_pos - p_neg


def parse_source(source):
    """Splits a source field into `(tag, origin)`.

    Accepts a bare tag (`news`), a known origin (`reuters`), or an explicit
    `tag:origin` pair.  Unknown origins are tagged `other`.
    """
    source = str(source).strip()
    lowered = source.lower()
    if ":" in lowered:
        tag, origin = (part.strip() for part in source.split(":", 1))
        tag = tag.lower()
        if tag not in TAGS:
            raise ValueError(f"Source tag should be one of {TAGS}. Got tag={tag}")
        return tag, origin
    if lowered in TAGS:
        return lowered, ""
    return ORIGIN_TAGS.get(lowered, OTHER), source


@dataclasses.dataclass(frozen=True)
class SentimentItem:
    """One scored text item.

    Attributes:
        date: the item's publication date as a `pd.Timestamp`.
        tag: one of `news`, `social`, `other`.
        origin: free-form origin string, e.g. `reuters`.
        p_pos: probability of positive sentiment.
        p_neu: probability of neutral sentiment.
        p_neg: probability of negative sentiment.
    """

    date: pd.Timestamp
    tag: str
    origin: str
    p_pos: float
    p_neu: float
    p_neg: float

    def __post_init__(self):
        if self.tag not in TAGS:
            raise ValueError(f"`tag` should be one of {TAGS}. Got tag={self.tag}")
        object.__setattr__(self, "date", pd.Timestamp(self.date).normalize())
        _validate_probabilities(self.p_pos, self.p_neu, self.p_neg)

    @property
    def score(self):
        return self.p_pos - self.p_neg


def stratify(items, source_filter):
    """Returns the items whose tag is in `source_filter`, order preserved."""
    source_filter = set(source_filter)
    unknown = source_filter - set(TAGS)
    if unknown:
        raise ValueError(
            f"`source_filter` should be a subset of {TAGS}. Got {sorted(unknown)}"
        )
    return [item for item in items if item.tag in source_filter]


def load_items(path, lexicon=None):
    """Loads scored items from `date,source,p_pos,p_neu,p_neg[,text]`.

    Rows whose three probabilities are blank are scored from `text` with the
    fallback lexicon scorer.

    Args:
        path: path to the item file.
        lexicon: `Lexicon` used for text-only rows.  Defaults to
            `DEFAULT_LEXICON`.

    Returns:
        a list of `SentimentItem` in file order.
    """
    lexicon = lexicon or lexicon_lib.DEFAULT_LEXICON
    raw = table_io.read_table(path)
    table_io.check_header(path, raw, ITEMS.HEADER, optional=(ITEMS.TEXT,))
    dates = table_io.parse_dates(path, raw[ITEMS.DATE])
    probabilities = np.stack(
        [
            table_io.parse_numbers(path, raw, column, allow_missing=True)
            for column in (ITEMS.P_POS, ITEMS.P_NEU, ITEMS.P_NEG)
        ],
        axis=1,
    )
    texts = raw[ITEMS.TEXT] if ITEMS.TEXT in raw else None
    items = []
    scored_from_text = 0
    for position, (date, source, row) in enumerate(
        zip(dates, raw[ITEMS.SOURCE], probabilities)
    ):
        line = table_io.line_of(position)
        try:
            tag, origin = parse_source(source)
            if np.isnan(row).all():
                if texts is None or not texts.iloc[position]:
                    raise ValueError("row has neither probabilities nor text")
                row = lexicon_lib.lexicon_score(texts.iloc[position], lexicon)
                scored_from_text += 1
            elif np.isnan(row).any():
                raise ValueError("row has partially missing probabilities")
            items.append(SentimentItem(date, tag, origin, *map(float, row)))
        except ValueError as e:
            raise SchemaError(path, str(e), line=line)
    logging.info(
        "Loaded %d sentiment items from %s (%d scored from text)",
        len(items),
        path,
        scored_from_text,
    )
    return items
