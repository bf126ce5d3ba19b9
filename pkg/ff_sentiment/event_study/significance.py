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
"""Cross-sectional tests on cumulative abnormal returns."""

import dataclasses

import numpy as np
import pandas as pd
from scipy import stats

from ff_sentiment.event_study import abnormal as abnormal_lib


@dataclasses.dataclass(frozen=True)
class BmpResult:
    z: float
    pvalue: float
    n_assets: int
    start: int
    horizon: int


def standardized_cars(abnormals, horizon, start=None):
    """Returns `{asset: CAR / sqrt(sum of forecast variances)}` at `horizon`.

    Assets whose CAR over `[start, horizon]` is missing are left out.
    """
    scars = {}
    for abnormal in abnormals:
        path = abnormal_lib.cumulative_ar(abnormal, start, horizon)
        car = path.at(horizon)
        variance = path.variance_at(horizon)
        if np.isfinite(car) and np.isfinite(variance) and variance > 0:
            scars[abnormal.asset] = car / np.sqrt(variance)
    return scars


def bmp_test(abnormals, horizon, start=None):
    """Standardized cross-sectional test of a zero mean CAR.

    Each asset's CAR over `[start, horizon]` is divided by the square root of
    the summed out-of-sample forecast variances of its estimation fit.  The
    statistic is `mean(SCAR) * sqrt(N) / std(SCAR)` with the sample standard
    deviation, and the p-value is two-sided standard normal.

    Args:
        abnormals: `AbnormalReturns`, one per asset.
        horizon: last event time of the CAR.
        start: first event time of the CAR, defaulting to each window's t1.

    Returns:
        a `BmpResult`.
    """
    abnormals = list(abnormals)
    scars = np.array(list(standardized_cars(abnormals, horizon, start).values()))
    if len(scars) < 2:
        raise ValueError(
            "The cross-sectional test needs at least 2 assets with a complete "
            f"CAR. Got {len(scars)}"
        )
    spread = scars.std(ddof=1)
    if not spread > 0:
        raise ValueError(
            "Standardized CARs have zero cross-sectional variance; the test "
            "statistic is undefined."
        )
    z = float(scars.mean() * np.sqrt(len(scars)) / spread)
    start = int(abnormals[0].event_time[0]) if start is None else start
    return BmpResult(
        z=z,
        pvalue=float(2.0 * stats.norm.sf(abs(z))),
        n_assets=len(scars),
        start=start,
        horizon=int(horizon),
    )


def paired_t(differences):
    """Returns `(t, two-sided p, one-sided p for a negative mean)`."""
    d = np.asarray(differences, dtype=np.float64)
    n = len(d)
    if n < 2:
        return np.nan, np.nan, np.nan
    mean = d.mean()
    spread = d.std(ddof=1)
    if spread > 0:
        t = mean / (spread / np.sqrt(n))
    elif mean == 0:
        t = 0.0
    else:
        t = np.sign(mean) * np.inf
    return (
        float(t),
        float(2.0 * stats.t.sf(abs(t), n - 1)),
        float(stats.t.cdf(t, n - 1)),
    )


def compare_models(baseline, augmented, start=None):
    """Compares the absolute CARs of two normal-return models asset by asset.

    For every horizon from `start` to the end of the window, the paired test
    runs on `|CAR_augmented| - |CAR_baseline|` over assets with a complete CAR
    under both models; a negative mean favours the augmented model.

    Args:
        baseline: mapping of asset to `AbnormalReturns` under the baseline
            model.
        augmented: the same mapping under the augmented model.
        start: first event time of the CARs, defaulting to the window's t1.

    Returns:
        a DataFrame indexed by horizon `t` with the mean absolute CAR of each
        model, their difference, the paired t statistic and its two- and
        one-sided p-values, `improved` and `n_assets`.
    """
    if set(baseline) != set(augmented):
        raise ValueError(
            "Models should cover identical assets. Got "
            f"{sorted(set(baseline) ^ set(augmented))} in only one of them"
        )
    assets = list(baseline)
    if not assets:
        raise ValueError("Cannot compare models over zero assets.")
    event_time = baseline[assets[0]].event_time
    start = int(event_time[0]) if start is None else start
    base_cars = np.array(
        [abnormal_lib.cumulative_ar(baseline[a], start).values for a in assets]
    )
    aug_cars = np.array(
        [abnormal_lib.cumulative_ar(augmented[a], start).values for a in assets]
    )
    horizons = event_time[event_time >= start]
    rows = []
    for i in range(len(horizons)):
        base = np.abs(base_cars[:, i])
        aug = np.abs(aug_cars[:, i])
        both = np.isfinite(base) & np.isfinite(aug)
        difference = aug[both] - base[both]
        t, p_two, p_one = paired_t(difference)
        mean_base = float(base[both].mean()) if both.any() else np.nan
        mean_aug = float(aug[both].mean()) if both.any() else np.nan
        rows.append(
            {
                "mean_abs_car_baseline": mean_base,
                "mean_abs_car_augmented": mean_aug,
                "difference": mean_aug - mean_base,
                "paired_t": t,
                "p_two_sided": p_two,
                "p_one_sided": p_one,
                "improved": bool(mean_aug < mean_base),
                "n_assets": int(both.sum()),
            }
        )
    return pd.DataFrame(rows, index=pd.Index(horizons, name="t"))
