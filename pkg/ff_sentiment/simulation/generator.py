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
"""Synthetic panels whose return-generating coefficients are known."""

import dataclasses

import numpy as np
import pandas as pd
from absl import logging

from ff_sentiment import core
from ff_sentiment import sentiment
from ff_sentiment.econometrics import specs
from ff_sentiment.panel import merge
from ff_sentiment.panel.columns import PANEL
from ff_sentiment.simulation import config as config_lib

# Items written per simulated day by `write_panel_files`.
ITEMS_PER_DAY = 2


@dataclasses.dataclass(frozen=True, eq=False)
class Truth:
    """Everything the generator drew, for checking estimators against.

    Attributes:
        config: the `SimulationConfig` the panel was drawn from.
        coefficients: DataFrame of true coefficients, one row per asset and
            one column per regressor label (`const` included), before any
            regime break.
        paths: dict mapping a label to an `(n_days, n_assets)` array of the
            coefficient in force on each panel row.
        series: DataFrame of every simulated regressor over the full
            simulated calendar, `hv_t` warm-up days included.
        excess_returns: DataFrame of excess returns over the same calendar.
        noise: DataFrame of the return noise over the panel rows.
    """

    config: object
    coefficients: pd.DataFrame
    paths: dict
    series: pd.DataFrame
    excess_returns: pd.DataFrame
    noise: pd.DataFrame

    def coefficient(self, label, asset=None):
        asset = self.config.assets[0] if asset is None else asset
        return float(self.coefficients.loc[asset, label])

    def path(self, label, asset=None):
        """Returns the true coefficient of `label` on each panel row."""
        asset = self.config.assets[0] if asset is None else asset
        column = self.config.assets.index(asset)
        return self.paths[label][:, column]

    def event_dates(self):
        dates = self.series.index[self.config.hv_window - 1 :]
        return [dates[shock.day] for shock in self.config.event_shocks]


class SyntheticPanel(tuple):
    """A `(panel, truth)` pair that also exposes both as attributes."""

    def __new__(cls, panel, truth):
        return super().__new__(cls, (panel, truth))

    @property
    def panel(self):
        return self[0]

    @property
    def truth(self):
        return self[1]


def replication_seeds(master_seed, n):
    """Spawns `n` independent seeds from `master_seed`."""
    if n < 1:
        raise ValueError(f"`n` should be at least 1. Got n={n}")
    children = np.random.SeedSequence(master_seed).spawn(n)
    return [int(child.generate_state(1)[0]) for child in children]


def _asset_coefficients(config, rng):
    truth = config.true_coefficients()
    n_assets = len(config.assets)
    table = pd.DataFrame(
        {label: np.full(n_assets, float(truth[label])) for label in truth},
        index=pd.Index(config.assets, name="asset"),
    )
    # Drawn even when the dispersion is zero so that seeds stay comparable.
    offsets = rng.standard_normal((n_assets, len(specs.FACTOR_REGRESSORS)))
    table[list(specs.FACTOR_REGRESSORS)] += config.beta_dispersion * offsets
    return table[list(config_lib.COEFFICIENT_LABELS)]


def _coefficient_paths(config, table):
    paths = {
        label: np.tile(table[label].to_numpy(), (config.n_days, 1))
        for label in table.columns
    }
    for regime_break in config.regime_breaks:
        paths[regime_break.coefficient][regime_break.day :, :] = regime_break.value
    return paths


def generate_panel(config=None):
    """Draws a synthetic panel and the coefficients that generated it.

    Excess returns follow
    `r = const + sum(beta_j * x_j) + noise`, with regressors from
    `INTERACTION_REGRESSORS`, AR(1) noise and any configured regime breaks and
    event shocks.  The simulated calendar carries `hv_window - 1` extra
    leading business days so that the returned panel has exactly `n_days`
    complete rows.  Identical configs (seed included) give identical panels.

    Args:
        config: a `SimulationConfig`, or a dict accepted by
            `SimulationConfig.from_config`. Defaults to `SimulationConfig()`.

    Returns:
        a `SyntheticPanel` unpacking to `(MergedPanel, Truth)`.
    """
    if config is None:
        config = config_lib.SimulationConfig()
    elif isinstance(config, dict):
        config = config_lib.SimulationConfig.from_config(config)
    rng = np.random.default_rng(config.seed)
    warm_up = config.hv_window - 1
    total = config.n_days + warm_up
    dates = pd.bdate_range(config.start_date, periods=total, name=PANEL.DATE)

    series = pd.DataFrame(index=dates)
    for name in specs.FACTOR_REGRESSORS:
        series[name] = config.factor_processes[name](total, rng)
    series[PANEL.RF] = config.rf_process(total, rng)
    series[PANEL.DGS10_DIFF] = config.dgs10_diff_process(total, rng)
    series[PANEL.S_T] = config.sentiment_process(total, rng)
    series[PANEL.N_ITEMS] = np.full(total, ITEMS_PER_DAY, dtype=np.int64)
    series[PANEL.HV_T] = sentiment.rolling_volatility(
        series[PANEL.S_T], window=config.hv_window
    ).hv_t
    series[PANEL.VIX_CLOSE] = config.vix_process(total, rng)

    table = _asset_coefficients(config, rng)
    paths = _coefficient_paths(config, table)

    frame = series.iloc[warm_up:]
    n_assets = len(config.assets)
    noise_process = core.Ar1Process(0.0, config.noise_stddev, config.noise_phi)
    noise = np.column_stack(
        [noise_process(config.n_days, rng) for _ in range(n_assets)]
    )
    returns = paths[specs.INTERCEPT] + noise
    for label in specs.INTERACTION_REGRESSORS:
        if label == PANEL.S_T_X_HV_T:
            x = frame[PANEL.S_T].to_numpy() * frame[PANEL.HV_T].to_numpy()
        else:
            x = frame[label].to_numpy()
        returns = returns + paths[label] * x[:, np.newaxis]
    for shock in config.event_shocks:
        columns = [
            config.assets.index(asset) for asset in (shock.assets or config.assets)
        ]
        returns[shock.day, columns] += shock.magnitude

    excess_returns = pd.DataFrame(returns, index=frame.index, columns=config.assets)
    # Warm-up rows carry returns too so that written files are complete.
    warm_noise = np.column_stack(
        [noise_process(warm_up, rng) for _ in range(n_assets)]
    )
    warm = series.iloc[:warm_up]
    warm_returns = table[specs.INTERCEPT].to_numpy() + warm_noise
    for label in specs.BASELINE_REGRESSORS + (PANEL.S_T,):
        warm_returns = warm_returns + np.outer(
            warm[label].to_numpy(), table[label].to_numpy()
        )
    full_returns = pd.concat(
        [
            pd.DataFrame(warm_returns, index=warm.index, columns=config.assets),
            excess_returns,
        ]
    )

    panel = merge.MergedPanel(
        frame=frame.copy(),
        excess_returns=excess_returns,
        rows_in_calendar=config.n_days,
    )
    truth = Truth(
        config=config,
        coefficients=table,
        paths=paths,
        series=series,
        excess_returns=full_returns,
        noise=pd.DataFrame(noise, index=frame.index, columns=config.assets),
    )
    logging.info(
        "Simulated %d rows for %d asset(s) with seed %d.",
        config.n_days,
        n_assets,
        config.seed,
    )
    return SyntheticPanel(panel, truth)
