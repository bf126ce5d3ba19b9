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
"""Configuration of synthetic panels with known coefficients."""

import dataclasses

from ff_sentiment import core
from ff_sentiment.econometrics import specs
from ff_sentiment.panel.columns import PANEL

# Daily factor moments in decimal fractions, echoing published five-factor data.
FACTOR_MOMENTS = {
    PANEL.MKT_RF: (0.000371, 0.016677),
    PANEL.SMB: (0.000140, 0.008791),
    PANEL.HML: (0.000382, 0.013677),
    PANEL.RMW: (0.000365, 0.007406),
    PANEL.CMA: (0.000398, 0.006423),
}
FACTOR_PHI = 0.1

COEFFICIENT_LABELS = specs.INTERACTION_REGRESSORS + (specs.INTERCEPT,)

DEFAULT_COEFFICIENTS = {
    specs.INTERCEPT: 0.0002,
    PANEL.MKT_RF: 0.94,
    PANEL.SMB: 0.05,
    PANEL.HML: -0.03,
    PANEL.RMW: 0.02,
    PANEL.CMA: 0.01,
    PANEL.DGS10_DIFF: -0.002,
    PANEL.S_T: 0.05,
    PANEL.HV_T: 0.0,
    PANEL.S_T_X_HV_T: 0.0,
}


def _default_factor_processes():
    return {
        name: core.Ar1Process(mean, stddev, FACTOR_PHI)
        for name, (mean, stddev) in FACTOR_MOMENTS.items()
    }


@dataclasses.dataclass(frozen=True)
class RegimeBreak:
    """From panel row `day` onward, `coefficient` takes `value` for all assets."""

    day: int
    coefficient: str
    value: float


@dataclasses.dataclass(frozen=True)
class EventShock:
    """Adds `magnitude` to the excess return of `assets` on row `day`.

    An empty `assets` tuple shocks every asset.
    """

    day: int
    magnitude: float
    assets: tuple = ()


@dataclasses.dataclass(frozen=True)
class SimulationConfig:
    """Parameters of a synthetic panel.

    Processes are `ff_sentiment.core.Process` instances or anything
    `parse_process` accepts.  Factor processes produce decimal fractions,
    `dgs10_diff` percentage points and `sentiment` the daily index, clipped to
    [-1, 1].

    Args:
        n_days: number of complete panel rows, at least 30.
        start_date: first simulated business day (the `hv_t` warm-up starts
            here, so the panel begins `hv_window - 1` business days later).
        assets: asset identifiers.
        coefficients: true coefficients by regressor label, `const` included;
            unspecified labels default to `DEFAULT_COEFFICIENTS`.
        factor_processes: process per factor name.
        rf_process: daily risk-free rate.
        dgs10_diff_process: daily yield change.
        sentiment_process: daily sentiment index.
        vix_process: VIX close.
        noise_stddev: marginal standard deviation of the return noise.
        noise_phi: AR(1) coefficient of the return noise.
        beta_dispersion: cross-asset standard deviation of the five factor
            loadings around their true values.
        hv_window: window of the sentiment volatility.
        regime_breaks: `RegimeBreak` entries, applied in order.
        event_shocks: `EventShock` entries.
        seed: master seed of every draw.
    """

    n_days: int = 724
    start_date: str = "2020-01-02"
    assets: tuple = ("SYN",)
    coefficients: dict = dataclasses.field(default_factory=dict)
    factor_processes: dict = dataclasses.field(
        default_factory=_default_factor_processes
    )
    rf_process: object = 0.00002
    dgs10_diff_process: object = (0.0033, 0.0609)
    sentiment_process: object = dataclasses.field(
        default_factory=lambda: core.Ar1Process(0.0458, 0.0678, 0.5, -1.0, 1.0)
    )
    vix_process: object = dataclasses.field(
        default_factory=lambda: core.Ar1Process(25.17, 8.72, 0.95, 9.0, None)
    )
    noise_stddev: float = 0.005
    noise_phi: float = 0.0
    beta_dispersion: float = 0.0
    hv_window: int = 21
    regime_breaks: tuple = ()
    event_shocks: tuple = ()
    seed: int = 0

    def __post_init__(self):
        if self.n_days < 30:
            raise ValueError(
                f"`n_days` should be at least 30. Got n_days={self.n_days}"
            )
        if self.noise_stddev < 0:
            raise ValueError(
                f"`noise_stddev` should be >= 0. Got noise_stddev={self.noise_stddev}"
            )
        if not abs(self.noise_phi) < 1:
            raise ValueError(
                f"`noise_phi` should satisfy |phi| < 1. Got noise_phi={self.noise_phi}"
            )
        if self.beta_dispersion < 0:
            raise ValueError(
                "`beta_dispersion` should be >= 0. "
                f"Got beta_dispersion={self.beta_dispersion}"
            )
        if self.hv_window < 2:
            raise ValueError(
                f"`hv_window` should be at least 2. Got hv_window={self.hv_window}"
            )
        assets = tuple(self.assets)
        if not assets or len(set(assets)) != len(assets):
            raise ValueError(f"`assets` should be unique and non-empty. Got {assets}")
        unknown = set(self.coefficients) - set(COEFFICIENT_LABELS)
        if unknown:
            raise ValueError(
                f"Unknown coefficients {sorted(unknown)}. "
                f"Expected labels from {COEFFICIENT_LABELS}"
            )
        missing = set(FACTOR_MOMENTS) - set(self.factor_processes)
        if missing:
            raise ValueError(f"Missing factor processes for {sorted(missing)}")
        object.__setattr__(self, "assets", assets)
        object.__setattr__(
            self,
            "factor_processes",
            {
                name: core.parse_process(process, name)
                for name, process in self.factor_processes.items()
            },
        )
        for field in (
            "rf_process",
            "dgs10_diff_process",
            "sentiment_process",
            "vix_process",
        ):
            object.__setattr__(
                self, field, core.parse_process(getattr(self, field), field)
            )
        breaks = tuple(
            b if isinstance(b, RegimeBreak) else RegimeBreak(**b)
            for b in self.regime_breaks
        )
        shocks = tuple(
            s if isinstance(s, EventShock) else EventShock(**s)
            for s in self.event_shocks
        )
        for b in breaks:
            if b.coefficient not in COEFFICIENT_LABELS:
                raise ValueError(f"Unknown break coefficient `{b.coefficient}`")
            if not 0 <= b.day < self.n_days:
                raise ValueError(
                    f"Break day should be in [0, {self.n_days}). Got day={b.day}"
                )
        for s in shocks:
            if not 0 <= s.day < self.n_days:
                raise ValueError(
                    f"Shock day should be in [0, {self.n_days}). Got day={s.day}"
                )
            stray = set(s.assets) - set(assets)
            if stray:
                raise ValueError(f"Shock names unknown assets {sorted(stray)}")
        object.__setattr__(self, "regime_breaks", breaks)
        object.__setattr__(
            self,
            "event_shocks",
            tuple(dataclasses.replace(s, assets=tuple(s.assets)) for s in shocks),
        )

    def true_coefficients(self):
        return {**DEFAULT_COEFFICIENTS, **self.coefficients}

    def replace(self, **changes):
        return dataclasses.replace(self, **changes)

    def get_config(self):
        return {
            "n_days": self.n_days,
            "start_date": self.start_date,
            "assets": list(self.assets),
            "coefficients": dict(self.coefficients),
            "factor_processes": {
                name: core.serialize_process(p)
                for name, p in self.factor_processes.items()
            },
            "rf_process": core.serialize_process(self.rf_process),
            "dgs10_diff_process": core.serialize_process(self.dgs10_diff_process),
            "sentiment_process": core.serialize_process(self.sentiment_process),
            "vix_process": core.serialize_process(self.vix_process),
            "noise_stddev": self.noise_stddev,
            "noise_phi": self.noise_phi,
            "beta_dispersion": self.beta_dispersion,
            "hv_window": self.hv_window,
            "regime_breaks": [dataclasses.asdict(b) for b in self.regime_breaks],
            "event_shocks": [
                {**dataclasses.asdict(s), "assets": list(s.assets)}
                for s in self.event_shocks
            ],
            "seed": self.seed,
        }

    @classmethod
    def from_config(cls, config):
        config = dict(config)
        config["assets"] = tuple(config.get("assets", ("SYN",)))
        return cls(**config)
