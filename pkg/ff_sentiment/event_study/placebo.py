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
"""Weekday-matched placebo events."""

import dataclasses

import numpy as np
import pandas as pd
from absl import logging

from ff_sentiment.event_study import study
from ff_sentiment.event_study import window as window_lib


def placebo_sample(calendar, n_events, reference_event, seed, window=None, exclude=()):
    """Draws placebo event dates sharing the reference event's weekday.

    Candidates are trading days of `calendar` on the weekday of the reference
    event's t=0.  Days within `[t1, t2]` of the reference event or of any date
    in `exclude` are removed.  When `window` is given, candidates must also
    leave room for its estimation and event windows inside the calendar.

    Args:
        calendar: sorted `DatetimeIndex` of trading days.
        n_events: number of placebo dates.
        reference_event: the real event date.
        seed: seed of the draw.
        window: optional `EventWindowConfig` supplying T_e, t1 and t2.
        exclude: further event dates to keep clear of.

    Returns:
        a sorted `DatetimeIndex` of `n_events` distinct trading days.
    """
    if n_events < 1:
        raise ValueError(f"`n_events` should be at least 1. Got n_events={n_events}")
    calendar = pd.DatetimeIndex(calendar)
    reference = window_lib.locate_event(calendar, reference_event)
    weekday = calendar[reference].dayofweek
    positions = np.arange(len(calendar))
    allowed = calendar.dayofweek == weekday
    t1, t2 = (window.t1, window.t2) if window is not None else (0, 0)
    for event in (reference_event,) + tuple(exclude):
        try:
            centre = window_lib.locate_event(calendar, event)
        except ValueError:
            continue
        allowed &= ~((positions >= centre + t1) & (positions <= centre + t2))
    if window is not None:
        earliest = window.estimation_length - window.estimation_offset
        allowed &= (positions >= earliest) & (positions + window.t2 < len(calendar))
    candidates = calendar[allowed]
    if len(candidates) < n_events:
        raise ValueError(
            f"Insufficient candidates for {n_events} placebo events: only "
            f"{len(candidates)} eligible trading days share the reference weekday"
        )
    rng = np.random.default_rng(seed)
    chosen = rng.choice(len(candidates), size=n_events, replace=False)
    return candidates[np.sort(chosen)]


@dataclasses.dataclass(frozen=True, eq=False)
class PlaceboBatch:
    """Model comparisons over placebo dates.

    Attributes:
        frame: DataFrame indexed by placebo date with the mean absolute CAR of
            each model, their difference, the one-sided paired p-value and
            `significant`.
        level: significance level of `significant`.
        horizon: event time at which the CARs are compared.
    """

    frame: pd.DataFrame
    level: float
    horizon: int

    @property
    def share_significant(self):
        return float(self.frame["significant"].mean())


def placebo_batch(
    panel,
    config,
    n_events,
    seed,
    assets=None,
    exclude=(),
    start=0,
    horizon=2,
    level=0.05,
):
    """Runs the baseline/augmented comparison on weekday-matched placebo dates.

    Args:
        panel: a `MergedPanel`.
        config: `EventWindowConfig` of the real event; its windows are reused
            at every placebo date.
        n_events: number of placebo dates.
        seed: seed of the placebo draw.
        assets: assets to study. Defaults to every asset.
        exclude: further dates the placebos must stay clear of.
        start: first event time of the compared CARs. Defaults to 0.
        horizon: last event time of the compared CARs. Defaults to 2.
        level: significance level of the one-sided improvement test.

    Returns:
        a `PlaceboBatch`.
    """
    if not config.t1 <= start <= horizon <= config.t2:
        raise ValueError(
            f"Expected t1 <= start <= horizon <= t2. Got start={start}, "
            f"horizon={horizon} for the window [{config.t1}, {config.t2}]"
        )
    dates = placebo_sample(
        panel.dates,
        n_events,
        config.event_date,
        seed,
        window=config,
        exclude=exclude,
    )
    rows = []
    for date in dates:
        placebo = dataclasses.replace(config, event_date=date)
        result = study.run_event_study(panel, placebo, assets=assets, start=start)
        row = result.comparison.loc[horizon]
        rows.append(
            {
                "mean_abs_car_baseline": row["mean_abs_car_baseline"],
                "mean_abs_car_augmented": row["mean_abs_car_augmented"],
                "difference": row["difference"],
                "p_one_sided": row["p_one_sided"],
                "significant": bool(row["p_one_sided"] < level),
            }
        )
    frame = pd.DataFrame(rows, index=pd.DatetimeIndex(dates, name="event_date"))
    batch = PlaceboBatch(frame=frame, level=level, horizon=horizon)
    logging.info(
        "Placebo batch: %d of %d dates show a significant improvement at %.2f",
        int(frame["significant"].sum()),
        len(frame),
        level,
    )
    return batch
