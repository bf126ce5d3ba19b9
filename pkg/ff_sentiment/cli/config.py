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
"""Run configuration shared by every subcommand."""

import dataclasses
import hashlib
import json
import os

import pandas as pd

from ff_sentiment.econometrics import specs
from ff_sentiment.panel import merge
from ff_sentiment.panel import units
from ff_sentiment.sentiment import index as index_lib
from ff_sentiment.sentiment import items as items_lib

DESCRIBE = "describe"
REGRESS = "regress"
ROLL = "roll"
EVENT = "event"
PLACEBO = "placebo"
SIMULATE = "simulate"
COMMANDS = (DESCRIBE, REGRESS, ROLL, EVENT, PLACEBO, SIMULATE)

INPUT_FIELDS = ("factors", "yields", "returns", "sentiment", "vix")
REQUIRED_INPUTS = ("factors", "yields", "returns", "sentiment")


def _tuple(values):
    return tuple(values or ())


def _parse_range(text):
    start, sep, end = text.partition(":")
    if not sep:
        raise ValueError(f"Share ranges should read `start:end`. Got {text!r}")
    return (
        pd.Timestamp(start) if start else None,
        pd.Timestamp(end) if end else None,
    )


@dataclasses.dataclass(frozen=True)
class RunConfig:
    """Everything a subcommand reads.

    Paths are stored as given; `validate()` checks them against the file
    system.  Units name how each input file is written (`percent` or
    `fraction`).
    """

    command: str
    factors: str = None
    yields: str = None
    returns: str = None
    sentiment: str = None
    vix: str = None
    asset: str = merge.EQUAL_WEIGHT
    unit: str = "percent"
    yields_unit: str = "percent"
    returns_unit: str = "fraction"
    spec: str = specs.AUGMENTED
    hv_window: int = index_lib.DEFAULT_WINDOW
    nw_lags: int = 5
    windows: tuple = (60,)
    step: int = 1
    targets: tuple = ("s_t",)
    share_ranges: tuple = ()
    share_level: float = 0.10
    event_date: str = None
    estimation_length: int = 120
    t1: int = -10
    t2: int = 10
    car_start: int = None
    assets: tuple = ()
    event_placebo: bool = False
    placebo_events: int = 20
    placebo_horizon: int = 2
    source_filter: tuple = ()
    calendar_policy: str = index_lib.NEXT_DAY
    iv_lags: tuple = ()
    n_days: int = 724
    num_workers: int = None
    out: str = "."
    seed: int = 724

    def __post_init__(self):
        for field in (
            "windows",
            "targets",
            "share_ranges",
            "assets",
            "source_filter",
            "iv_lags",
        ):
            object.__setattr__(self, field, _tuple(getattr(self, field)))
        object.__setattr__(self, "windows", tuple(int(w) for w in self.windows))
        object.__setattr__(self, "iv_lags", tuple(int(lag) for lag in self.iv_lags))

    def validate(self):
        """Checks paths and parameter ranges, raising `ValueError`."""
        if self.command not in COMMANDS:
            raise ValueError(
                f"Unknown command `{self.command}`. Expected one of {COMMANDS}"
            )
        if self.command != SIMULATE:
            missing = [f for f in REQUIRED_INPUTS if not getattr(self, f)]
            if missing:
                flags = ", ".join(f"--{f}" for f in missing)
                raise ValueError(f"`{self.command}` requires {flags}")
            for field in INPUT_FIELDS:
                path = getattr(self, field)
                if path and not os.path.isfile(path):
                    raise ValueError(f"--{field}: no such file {path}")
        for unit in (self.unit, self.yields_unit, self.returns_unit):
            units.validate_unit(unit)
        if self.spec not in specs.SPEC_NAMES or self.spec == specs.CUSTOM:
            raise ValueError(
                "`spec` should be baseline, augmented or interaction. "
                f"Got spec={self.spec}"
            )
        if self.hv_window < 2:
            raise ValueError(f"`hv_window` should be at least 2. Got {self.hv_window}")
        if self.nw_lags < 0:
            raise ValueError(f"`nw_lags` should be >= 0. Got {self.nw_lags}")
        if not self.windows or min(self.windows) < 2:
            raise ValueError(f"`windows` should be at least 2. Got {self.windows}")
        if self.step < 1:
            raise ValueError(f"`step` should be at least 1. Got {self.step}")
        if not 0 < self.share_level < 1:
            raise ValueError(
                f"`share_level` should be in (0, 1). Got {self.share_level}"
            )
        for text in self.share_ranges:
            _parse_range(text)
        if self.command in (EVENT, PLACEBO) and not self.event_date:
            raise ValueError(f"`{self.command}` requires --event_date")
        if not self.t1 <= 0 <= self.t2:
            raise ValueError(f"Expected t1 <= 0 <= t2. Got t1={self.t1}, t2={self.t2}")
        if self.placebo_events < 1:
            raise ValueError(
                f"`placebo_events` should be at least 1. Got {self.placebo_events}"
            )
        unknown = set(self.source_filter) - set(items_lib.TAGS)
        if unknown:
            raise ValueError(
                f"Unknown source tags {sorted(unknown)}. Expected {items_lib.TAGS}"
            )
        if self.calendar_policy not in index_lib.CALENDAR_POLICIES:
            raise ValueError(
                f"`calendar_policy` should be one of {index_lib.CALENDAR_POLICIES}. "
                f"Got {self.calendar_policy}"
            )
        if any(lag < 1 for lag in self.iv_lags):
            raise ValueError(f"`iv_lags` should be positive. Got {self.iv_lags}")
        if self.n_days < 30:
            raise ValueError(f"`n_days` should be at least 30. Got {self.n_days}")
        return self

    def ranges(self):
        return [_parse_range(text) for text in self.share_ranges]

    def get_config(self):
        config = dataclasses.asdict(self)
        for key, value in config.items():
            if isinstance(value, tuple):
                config[key] = list(value)
        return config

    @classmethod
    def from_config(cls, config):
        return cls(**config)

    def config_hash(self):
        """SHA-256 of the sorted JSON config, output directory excluded."""
        config = self.get_config()
        config.pop("out")
        payload = json.dumps(config, sort_keys=True)
        return hashlib.sha256(payload.encode("utf-8")).hexdigest()

    def header(self, version):
        digest = self.config_hash()[:12]
        return f"ff_sentiment {version} config={digest} seed={self.seed}"
