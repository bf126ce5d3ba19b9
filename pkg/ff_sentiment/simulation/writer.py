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
"""Writes synthetic panels in the on-disk layouts the loaders read."""

import os

import numpy as np
import pandas as pd

from ff_sentiment.panel.columns import FACTORS
from ff_sentiment.panel.columns import ITEMS
from ff_sentiment.panel.columns import PANEL
from ff_sentiment.panel.columns import VIX
from ff_sentiment.panel.columns import YIELDS
from ff_sentiment.simulation import config as config_lib
from ff_sentiment.simulation import generator
from ff_sentiment.utils import table_io

FACTORS_FILE = "factors.csv"
YIELDS_FILE = "yields.csv"
RETURNS_FILE = "returns.csv"
SENTIMENT_FILE = "sentiment.csv"
VIX_FILE = "vix.csv"

ITEM_SOURCES = ("news:newswire", "social:stocktwits")
MIN_YIELD_LEVEL = 1.0

DEMO_EVENT_DAY = 400
DEMO_CONFIG = config_lib.SimulationConfig(
    n_days=724,
    assets=tuple(f"A{i:02d}" for i in range(1, 31)),
    noise_stddev=0.008,
    noise_phi=0.1,
    beta_dispersion=0.15,
    event_shocks=(config_lib.EventShock(day=DEMO_EVENT_DAY, magnitude=0.03),),
    seed=724,
)


def _yield_levels(dates, diffs):
    # One extra leading business day so every simulated day has a difference.
    previous = dates[0] - pd.offsets.BDay(1)
    path = np.concatenate([[0.0], np.cumsum(diffs)])
    base = max(1.5, MIN_YIELD_LEVEL - path.min())
    index = pd.DatetimeIndex([previous]).append(dates).rename(PANEL.DATE)
    return pd.DataFrame({YIELDS.DGS10_YIELD: base + path}, index=index)


def _items(series):
    s_t = series[PANEL.S_T].to_numpy()
    p_pos = np.maximum(s_t, 0.0)
    p_neg = np.maximum(-s_t, 0.0)
    rows = []
    for source in ITEM_SOURCES:
        rows.append(
            pd.DataFrame(
                {
                    ITEMS.DATE: series.index,
                    ITEMS.SOURCE: source,
                    ITEMS.P_POS: p_pos,
                    ITEMS.P_NEU: 1.0 - p_pos - p_neg,
                    ITEMS.P_NEG: p_neg,
                }
            )
        )
    return pd.concat(rows).sort_values(ITEMS.DATE, kind="mergesort")


def write_panel_files(synthetic, directory, header=None):
    """Writes a `generate_panel` result as factor, yield, return, item and VIX files.

    Factors are written in percent, yields as percent levels, raw returns in
    decimal fractions (excess return plus the risk-free rate) in the wide
    layout, and the sentiment index as two items per day whose scores equal
    `s_t`.  Loading and merging the files reproduces the simulated panel up to
    rounding of the unit conversions.

    Args:
        synthetic: a `(MergedPanel, Truth)` pair from `generate_panel`.
        directory: output directory, created when missing.
        header: optional comment line written at the top of every file.

    Returns:
        dict mapping `factors`, `yields`, `returns`, `sentiment` and `vix` to
        the written paths.
    """
    _, truth = synthetic
    series = truth.series
    os.makedirs(directory, exist_ok=True)
    paths = {
        "factors": os.path.join(directory, FACTORS_FILE),
        "yields": os.path.join(directory, YIELDS_FILE),
        "returns": os.path.join(directory, RETURNS_FILE),
        "sentiment": os.path.join(directory, SENTIMENT_FILE),
        "vix": os.path.join(directory, VIX_FILE),
    }
    table_io.write_table(
        series[list(FACTORS.VALUES)] * 100.0, paths["factors"], header=header
    )
    table_io.write_table(
        _yield_levels(series.index, series[PANEL.DGS10_DIFF].to_numpy()),
        paths["yields"],
        header=header,
    )
    raw_returns = truth.excess_returns.add(series[PANEL.RF], axis=0)
    raw_returns.index.name = PANEL.DATE
    table_io.write_table(raw_returns, paths["returns"], header=header)
    table_io.write_table(_items(series), paths["sentiment"], header=header, index=False)
    table_io.write_table(series[[VIX.VIX_CLOSE]], paths["vix"], header=header)
    return paths


def write_demo(directory, header=None):
    """Writes the demo dataset and returns `(paths, event_date)`.

    The demo holds 30 assets over 724 complete trading days with a 3% common
    return shock on its event date.
    """
    synthetic = generator.generate_panel(DEMO_CONFIG)
    paths = write_panel_files(synthetic, directory, header=header)
    event_date = synthetic.truth.event_dates()[0]
    return paths, event_date.strftime("%Y-%m-%d")
