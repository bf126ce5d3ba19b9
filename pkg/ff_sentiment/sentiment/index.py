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
"""Daily sentiment index `s_t` and its rolling volatility `hv_t`."""

import collections
import dataclasses
import math

import numpy as np
import pandas as pd
from absl import logging

from ff_sentiment.panel.columns import PANEL
from ff_sentiment.sentiment import items as items_lib

DEFAULT_WINDOW = 21
NEXT_DAY = "next_day"
DROP = "drop"
CALENDAR_POLICIES = (NEXT_DAY, DROP)


@dataclasses.dataclass(frozen=True)
class DailySentiment:
    date: pd.Timestamp
    s_t: float
    n_items: int


@dataclasses.dataclass(frozen=True)
class SentimentVolatilitySeries:
    """Rolling population standard deviation of the daily index.

    Attributes:
        hv_t: Series on the index of the input series; the first `window - 1`
            observations have no complete window and are NaN.
        window: window length in observations.
    """

    hv_t: pd.Series
    window: int

    def defined(self):
        return self.hv_t.dropna()


def aggregate_daily(items, date):
    """Averages the scores of the items dated `date`.

    The mean is an exactly rounded sum divided by the item count, so the result
    does not depend on item order.

    Returns:
        a `DailySentiment`, or None when no item falls on `date`.
    """
    date = pd.Timestamp(date).normalize()
    scores = [item.score for item in items if item.date == date]
    if not scores:
        return None
    return DailySentiment(date, math.fsum(scores) / len(scores), len(scores))


def daily_index(items):
    """Builds the daily index over every date carrying at least one item.

    Returns:
        a DataFrame indexed by date with columns `s_t` and `n_items`.  Dates
        without items are absent, never zero-filled.
    """
    by_date = collections.defaultdict(list)
    for item in items:
        by_date[item.date].append(item.score)
    dates = sorted(by_date)
    frame = pd.DataFrame(
        {
            PANEL.S_T: [math.fsum(by_date[d]) / len(by_date[d]) for d in dates],
            PANEL.N_ITEMS: [len(by_date[d]) for d in dates],
        },
        index=pd.DatetimeIndex(dates, name="date"),
    )
    frame[PANEL.S_T] = frame[PANEL.S_T].astype(np.float64)
    frame[PANEL.N_ITEMS] = frame[PANEL.N_ITEMS].astype(np.int64)
    return frame


def assign_to_calendar(items, calendar, policy=NEXT_DAY):
    """Moves items dated on non-trading days onto the trading calendar.

    Args:
        items: list of `SentimentItem`.
        calendar: sorted trading dates, usually the factor table's index.
        policy: One of `"next_day"`, `"drop"`.  `"next_day"` moves an item to
            the first trading day after its date; items after the last trading
            day are dropped under either policy.

    Returns:
        a list of `SentimentItem` dated on `calendar`.
    """
    if policy not in CALENDAR_POLICIES:
        raise ValueError(
            f"`policy` should be one of {CALENDAR_POLICIES}. Got policy={policy}"
        )
    calendar = pd.DatetimeIndex(calendar)
    trading = set(calendar)
    assigned = []
    moved = dropped = 0
    for item in items:
        if item.date in trading:
            assigned.append(item)
            continue
        position = calendar.searchsorted(item.date)
        if policy == DROP or position >= len(calendar):
            dropped += 1
            continue
        assigned.append(dataclasses.replace(item, date=calendar[position]))
        moved += 1
    if moved or dropped:
        logging.info(
            "Calendar assignment (%s): %d items moved, %d dropped",
            policy,
            moved,
            dropped,
        )
    return assigned


def rolling_volatility(s_series, window=DEFAULT_WINDOW):
    """Computes `hv_t`, the population standard deviation over `window` days.

    Usage:

    ```python
    s = pd.Series([0.1, -0.1, 0.1, -0.1])
    rolling_volatility(s, window=2).hv_t
    # [nan, 0.1, 0.1, 0.1]
    ```

    Args:
        s_series: Series (or array-like) of daily index values in time order.
        window: number of observations per window, at least 2.  Defaults to 21.

    Returns:
        a `SentimentVolatilitySeries`.
    """
    if window < 2:
        raise ValueError(f"`window` should be at least 2. Got window={window}")
    if not isinstance(s_series, pd.Series):
        s_series = pd.Series(np.asarray(s_series, dtype=np.float64))
    values = s_series.to_numpy(dtype=np.float64)
    if len(values) < window:
        raise ValueError(
            f"Series of length {len(values)} is shorter than the window. "
            f"Got window={window}"
        )
    windows = np.lib.stride_tricks.sliding_window_view(values, window)
    hv = np.full(len(values), np.nan)
    hv[window - 1 :] = windows.std(axis=1, ddof=0)
    return SentimentVolatilitySeries(
        pd.Series(hv, index=s_series.index, name=PANEL.HV_T), window
    )


def build_sentiment_index(
    items,
    calendar=None,
    window=DEFAULT_WINDOW,
    source_filter=None,
    policy=NEXT_DAY,
):
    """Runs the item-to-index pipeline.

    Items are stratified first, so `hv_t` of a stratified run is computed on
    the stratified `s_t`.

    Args:
        items: list of `SentimentItem`.
        calendar: optional trading calendar items are assigned to.
        window: volatility window in trading days.
        source_filter: optional subset of source tags to keep.
        policy: calendar assignment policy, see `assign_to_calendar`.

    Returns:
        a DataFrame indexed by date with `s_t`, `n_items` and `hv_t`.
    """
    if source_filter is not None:
        items = items_lib.stratify(items, source_filter)
    if calendar is not None:
        items = assign_to_calendar(items, calendar, policy=policy)
    frame = daily_index(items)
    if len(frame) == 0:
        raise ValueError("No sentiment items remain to build an index from.")
    frame[PANEL.HV_T] = rolling_volatility(frame[PANEL.S_T], window).hv_t
    logging.info(
        "Built sentiment index over %d dates from %d items (window=%d)",
        len(frame),
        len(items),
        window,
    )
    return frame
