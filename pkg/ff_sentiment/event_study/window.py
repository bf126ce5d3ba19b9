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
"""Event-time bookkeeping on a trading calendar."""

import dataclasses

import numpy as np
import pandas as pd
from absl import logging

DEFAULT_ESTIMATION_LENGTH = 120
DEFAULT_T1 = -10
DEFAULT_T2 = 10


@dataclasses.dataclass(frozen=True)
class EventWindowConfig:
    """An event date with its estimation and event windows.

    Event time is counted in trading days of the panel calendar, with t=0 the
    first trading day on or after `event_date`.  The estimation window holds
    the `estimation_length` trading days that end right before the earlier of
    t=t1 and t=0, so the two windows never overlap.

    Args:
        event_date: nominal event date (anything `pd.Timestamp` accepts).
        estimation_length: number of estimation trading days, T_e.
            Defaults to 120.
        t1: first event-window day, at most 0. Defaults to -10.
        t2: last event-window day, at least 0. Defaults to 10.
    """

    event_date: pd.Timestamp
    estimation_length: int = DEFAULT_ESTIMATION_LENGTH
    t1: int = DEFAULT_T1
    t2: int = DEFAULT_T2

    def __post_init__(self):
        object.__setattr__(self, "event_date", pd.Timestamp(self.event_date))
        if not self.t1 <= 0 <= self.t2:
            raise ValueError(
                "Event window bounds should satisfy t1 <= 0 <= t2. "
                f"Got t1={self.t1}, t2={self.t2}"
            )
        if self.estimation_length < 2:
            raise ValueError(
                "`estimation_length` should be at least 2. "
                f"Got estimation_length={self.estimation_length}"
            )

    @property
    def event_times(self):
        return np.arange(self.t1, self.t2 + 1)

    @property
    def estimation_offset(self):
        """Event time of the first day after the estimation window."""
        return min(self.t1, 0)

    def get_config(self):
        return {
            "event_date": self.event_date.strftime("%Y-%m-%d"),
            "estimation_length": self.estimation_length,
            "t1": self.t1,
            "t2": self.t2,
        }

    @classmethod
    def from_config(cls, config):
        return cls(**config)


def locate_event(dates, event_date):
    """Returns the calendar position of t=0 for `event_date`.

    A non-trading `event_date` maps to the next trading day.
    """
    event_date = pd.Timestamp(event_date)
    position = int(dates.searchsorted(event_date, side="left"))
    if position == len(dates):
        raise ValueError(
            f"Event date {event_date:%Y-%m-%d} falls after the last trading day "
            f"{dates[-1]:%Y-%m-%d}"
        )
    if dates[position] != event_date:
        logging.info(
            "Event date %s is not a trading day; t=0 moves to %s",
            f"{event_date:%Y-%m-%d}",
            f"{dates[position]:%Y-%m-%d}",
        )
    return position
