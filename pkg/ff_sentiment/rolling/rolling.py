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
"""Sliding-window re-estimation of a regression and its coefficient paths."""

import concurrent.futures
import dataclasses

import numpy as np
import pandas as pd
from absl import logging

from ff_sentiment import econometrics
from ff_sentiment.panel.columns import PANEL

DEFAULT_WINDOW = 60
DEFAULT_HORIZONS = (60, 90, 120)

# Export names of well-known coefficients; the first target is always exported
# unprefixed as coef,se,t,p.
EXPORT_NAMES = {
    PANEL.S_T: "gamma",
    PANEL.S_T_X_HV_T: "theta",
    PANEL.HV_T: "delta",
}

_STATISTICS = ("coef", "se", "t", "p")


def _column(target, statistic):
    return f"{target}:{statistic}"


@dataclasses.dataclass(frozen=True, eq=False)
class CoefficientPath:
    """Per-window estimates of the target coefficients.

    Attributes:
        frame: DataFrame indexed by window end date with `window_start`,
            `nobs`, `reason` and, per target, `<target>:coef`, `<target>:se`,
            `<target>:t` and `<target>:p` columns.  Windows that could not be
            estimated carry NaN statistics and a non-empty `reason`.
        window: window length in trading days.
        step: advance between consecutive windows.
        targets: coefficient labels tracked.
        lags: Newey-West lag truncation behind the standard errors.
    """

    frame: pd.DataFrame
    window: int
    step: int
    targets: tuple
    lags: int

    def __len__(self):
        return len(self.frame)

    @property
    def window_ends(self):
        return self.frame.index

    def _target(self, target):
        target = target or self.targets[0]
        if target not in self.targets:
            raise ValueError(
                f"`target` should be one of {self.targets}. Got target={target}"
            )
        return target

    def estimates(self, target=None):
        return self.frame[_column(self._target(target), "coef")]

    def standard_errors(self, target=None):
        return self.frame[_column(self._target(target), "se")]

    def pvalues(self, target=None):
        return self.frame[_column(self._target(target), "p")]

    def to_export(self):
        """Returns the path as `window_end,coef,se,t,p[,theta,theta_se,...]`."""
        columns = {}
        for i, target in enumerate(self.targets):
            name = EXPORT_NAMES.get(target, target)
            for statistic in _STATISTICS:
                if i == 0:
                    key = statistic
                elif statistic == "coef":
                    key = name
                else:
                    key = f"{name}_{statistic}"
                columns[key] = self.frame[_column(target, statistic)]
        export = pd.DataFrame(columns, index=self.frame.index)
        export["reason"] = self.frame["reason"]
        export.index.name = "window_end"
        return export


def _fit_window(design, start, window, targets, lags):
    sub = design.take(slice(start, start + window))
    try:
        fit = econometrics.inference(
            econometrics.ols_fit(sub), econometrics.NEWEY_WEST, lags=lags
        )
    except econometrics.RankDeficientError as e:
        return None, str(e)
    values = []
    for target in targets:
        values.extend(fit.coefficient(target))
    return values, ""


def rolling_fit(
    panel,
    spec,
    asset,
    window=DEFAULT_WINDOW,
    step=1,
    targets=(PANEL.S_T,),
    nw_lags=econometrics.DEFAULT_LAGS,
    num_workers=None,
):
    """Estimates `spec` on every `window`-day slice of `panel`.

    Windows are indexed by their last date, so the value at date t uses data
    through t only.  `hv_t` is taken from the panel as computed on the full
    series and is not recomputed per window.

    Args:
        panel: a `MergedPanel`.
        spec: a `RegressionSpec`.
        asset: asset whose excess return is the response.
        window: window length W, larger than the number of columns.
            Defaults to 60.
        step: advance between windows.  Defaults to 1.
        targets: coefficient labels to record.  Defaults to `("s_t",)`.
        nw_lags: Newey-West lags for the window standard errors.
        num_workers: when set, windows are estimated on a thread pool of that
            size.  The result does not depend on it.

    Returns:
        a `CoefficientPath` with `(n - W) // step + 1` windows.
    """
    targets = tuple(targets)
    if not targets:
        raise ValueError("`targets` should name at least one coefficient.")
    unknown = [t for t in targets if t not in spec.labels]
    if unknown:
        raise ValueError(
            f"Targets {unknown} are not coefficients of the {spec.name} model "
            f"{spec.labels}"
        )
    if window <= spec.k:
        raise ValueError(
            f"`window` should exceed the {spec.k} columns of the {spec.name} "
            f"model. Got window={window}"
        )
    if step < 1:
        raise ValueError(f"`step` should be at least 1. Got step={step}")
    if nw_lags >= window:
        raise ValueError(
            f"`nw_lags` should be smaller than the window. Got nw_lags={nw_lags}"
        )
    n = len(panel)
    if n < window:
        raise econometrics.InsufficientDataError(
            f"insufficient rows: panel has {n} rows for window={window}"
        )
    design = econometrics.build_design(panel, spec, asset)
    starts = list(range(0, n - window + 1, step))

    def fit(start):
        return _fit_window(design, start, window, targets, nw_lags)

    if num_workers and num_workers > 1:
        with concurrent.futures.ThreadPoolExecutor(num_workers) as executor:
            results = list(executor.map(fit, starts))
    else:
        results = [fit(start) for start in starts]

    width = len(targets) * len(_STATISTICS)
    values = np.full((len(starts), width), np.nan)
    reasons = []
    for i, (row, reason) in enumerate(results):
        if row is not None:
            values[i] = row
        reasons.append(reason)
    columns = [_column(t, s) for t in targets for s in _STATISTICS]
    frame = pd.DataFrame(values, columns=columns)
    frame.insert(0, "nobs", window)
    frame.insert(0, "window_start", design.dates[starts])
    frame["reason"] = reasons
    frame.index = pd.DatetimeIndex(
        design.dates[[s + window - 1 for s in starts]], name="window_end"
    )
    failed = sum(1 for r in reasons if r)
    if failed:
        logging.warning(
            "%d of %d rolling windows were rank deficient and left missing",
            failed,
            len(starts),
        )
    logging.info(
        "Fitted %d rolling windows (W=%d, step=%d) for %s",
        len(starts),
        window,
        step,
        asset,
    )
    return CoefficientPath(frame, window, step, targets, nw_lags)


def rolling_fit_horizons(panel, spec, asset, windows=DEFAULT_HORIZONS, **kwargs):
    """Runs `rolling_fit` once per window length, keyed by window."""
    return {
        window: rolling_fit(panel, spec, asset, window=window, **kwargs)
        for window in windows
    }


def _in_range(path, start, end):
    index = path.window_ends
    mask = np.ones(len(index), dtype=bool)
    if start is not None:
        mask &= index >= pd.Timestamp(start)
    if end is not None:
        mask &= index <= pd.Timestamp(end)
    return mask


def significance_share(path, level=0.10, target=None, start=None, end=None):
    """Fraction of estimated windows rejecting a zero coefficient at `level`.

    Args:
        path: a `CoefficientPath`.
        level: significance level in (0, 1).  Defaults to 0.10.
        target: coefficient label, defaults to the path's first target.
        start: optional first window end date to include.
        end: optional last window end date to include.
    """
    if not 0 < level < 1:
        raise ValueError(f"`level` should be in (0, 1). Got level={level}")
    pvalues = path.pvalues(target)[_in_range(path, start, end)].dropna()
    if len(pvalues) == 0:
        raise ValueError("Cannot compute a significance share of an empty path.")
    return float((pvalues < level).mean())


def sign_changes(path, target=None):
    """Returns the window end dates where the estimate changes sign.

    Missing windows are skipped; a zero estimate does not count as a sign.
    """
    estimates = path.estimates(target).dropna()
    signs = np.sign(estimates)
    signs = signs[signs != 0]
    changed = signs.ne(signs.shift()) & signs.shift().notna()
    return pd.DatetimeIndex(signs.index[changed.to_numpy()], name="window_end")
