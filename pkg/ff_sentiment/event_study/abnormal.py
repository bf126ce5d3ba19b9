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
"""Normal-return models, abnormal returns and their cumulation."""

import dataclasses

import numpy as np
import pandas as pd
from absl import logging

from ff_sentiment import econometrics
from ff_sentiment.econometrics.specs import INTERCEPT
from ff_sentiment.event_study import window as window_lib


def _estimation_rows(panel, config):
    position = window_lib.locate_event(panel.dates, config.event_date)
    end = position + config.estimation_offset
    start = end - config.estimation_length
    if start < 0:
        raise econometrics.InsufficientDataError(
            f"insufficient estimation rows: the event on "
            f"{panel.dates[position]:%Y-%m-%d} needs {config.estimation_length} "
            f"trading days before event time {config.estimation_offset}. Got {end}"
        )
    return position, start, end


def estimate_normal_model(panel, asset, config, spec):
    """Fits `spec` for `asset` on the estimation window of `config`.

    Returns:
        a `FitResult` with classical inference over exactly
        `config.estimation_length` rows.
    """
    _, start, end = _estimation_rows(panel, config)
    design = econometrics.build_design(panel.take(slice(start, end)), spec, asset)
    return econometrics.ols_fit(design)


@dataclasses.dataclass(frozen=True, eq=False)
class AbnormalReturns:
    """Abnormal returns of one asset over an event window.

    Attributes:
        asset: the asset.
        event_time: integer event times t1..t2.
        dates: trading dates of the event times; NaT outside the panel.
        values: abnormal returns, NaN on days that could not be evaluated.
        forecast_variance: out-of-sample variance of each prediction error,
            `s^2 * (1 + x' (X'X)^-1 x)`, NaN alongside missing values.
    """

    asset: str
    event_time: np.ndarray
    dates: pd.DatetimeIndex
    values: np.ndarray
    forecast_variance: np.ndarray

    def __len__(self):
        return len(self.values)

    @property
    def missing(self):
        return np.isnan(self.values)

    def position_of(self, t):
        if not self.event_time[0] <= t <= self.event_time[-1]:
            raise ValueError(
                f"Event time {t} lies outside the computed range "
                f"[{self.event_time[0]}, {self.event_time[-1]}]"
            )
        return int(t - self.event_time[0])

    def to_series(self):
        return pd.Series(self.values, index=pd.Index(self.event_time, name="t"))


def _event_regressors(panel, labels, rows):
    n = len(panel)
    inside = (rows >= 0) & (rows < n)
    clipped = np.clip(rows, 0, n - 1)
    columns = []
    for label in labels:
        if label == INTERCEPT:
            columns.append(np.ones(len(rows)))
        else:
            columns.append(np.where(inside, panel.column(label)[clipped], np.nan))
    return np.column_stack(columns), inside, clipped


def abnormal_returns(fit, panel, asset, config):
    """Realized excess returns minus the normal model's prediction.

    The prediction applies the estimation-window coefficients to the realized
    event-window regressors, `s_t` included.  Event days outside the panel or
    with a missing regressor are left missing.
    """
    position = window_lib.locate_event(panel.dates, config.event_date)
    event_time = config.event_times
    rows = position + event_time
    x, inside, clipped = _event_regressors(panel, fit.labels, rows)
    realized = np.where(inside, panel.excess_return(asset)[clipped], np.nan)
    valid = np.isfinite(x).all(axis=1) & np.isfinite(realized)

    values = np.full(len(rows), np.nan)
    variance = np.full(len(rows), np.nan)
    values[valid] = realized[valid] - fit.predict(x[valid])
    leverage = np.einsum("ij,jk,ik->i", x[valid], fit.xtx_inv, x[valid])
    variance[valid] = fit.scale * (1.0 + leverage)
    if not valid.all():
        logging.warning(
            "%s: %d of %d event days could not be evaluated",
            asset,
            int((~valid).sum()),
            len(rows),
        )
    dates = pd.DatetimeIndex(
        np.where(inside, panel.dates.to_numpy()[clipped], np.datetime64("NaT")),
        name="date",
    )
    return AbnormalReturns(
        asset=asset,
        event_time=event_time,
        dates=dates,
        values=values,
        forecast_variance=variance,
    )


@dataclasses.dataclass(frozen=True, eq=False)
class CarPath:
    """Running sum of abnormal returns from `start`.

    `values[i]` is CAR over `[start, event_time[i]]`.  After the first missing
    abnormal return every later value is missing and `complete` is False.
    """

    event_time: np.ndarray
    values: np.ndarray
    variance: np.ndarray
    complete: bool

    @property
    def start(self):
        return int(self.event_time[0])

    def at(self, t):
        return float(self.values[int(t) - self.start])

    def variance_at(self, t):
        return float(self.variance[int(t) - self.start])

    def to_series(self):
        return pd.Series(self.values, index=pd.Index(self.event_time, name="t"))


def cumulative_ar(abnormal, t1=None, t2=None):
    """Cumulates `abnormal` over `[t1, t2]`, defaulting to its full range.

    Args:
        abnormal: an `AbnormalReturns`.
        t1: first event time of the sum.
        t2: last event time of the sum.

    Returns:
        a `CarPath` carrying the running CAR and the running sum of forecast
        variances used to standardize it.
    """
    t1 = int(abnormal.event_time[0]) if t1 is None else t1
    t2 = int(abnormal.event_time[-1]) if t2 is None else t2
    if t1 > t2:
        raise ValueError(f"Cannot cumulate over an empty range. Got t1={t1}, t2={t2}")
    first = abnormal.position_of(t1)
    last = abnormal.position_of(t2)
    values = np.cumsum(abnormal.values[first : last + 1])
    variance = np.cumsum(abnormal.forecast_variance[first : last + 1])
    complete = bool(np.isfinite(values).all())
    if not complete:
        logging.warning(
            "%s: CAR over [%d, %d] is incomplete from t=%d on",
            abnormal.asset,
            t1,
            t2,
            int(abnormal.event_time[first + np.flatnonzero(np.isnan(values))[0]]),
        )
    return CarPath(
        event_time=abnormal.event_time[first : last + 1],
        values=values,
        variance=variance,
        complete=complete,
    )
