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
"""Two-stage least squares and lagged sentiment-shock instruments."""

import dataclasses

import numpy as np
import pandas as pd
from absl import logging
from scipy import stats

from ff_sentiment.econometrics import covariance
from ff_sentiment.econometrics import ols
from ff_sentiment.econometrics.design import DesignMatrix
from ff_sentiment.econometrics.specs import INTERCEPT
from ff_sentiment.panel.columns import PANEL

WEAK_INSTRUMENT_F = 10.0


def shock_label(column, lag):
    return f"{column}_shock_lag{lag}"


def add_lagged_shocks(panel, column=PANEL.S_T, lags=(1,)):
    """Attaches lagged first differences of `column` as instrument columns.

    The shock on row t is `column[t] - column[t-1]` over consecutive panel
    rows; lag L shifts it L rows.  Rows left without a complete set of shocks
    are dropped from the returned panel.

    Returns:
        a `MergedPanel` with one `<column>_shock_lag<L>` column per lag.
    """
    lags = tuple(int(lag) for lag in lags)
    if not lags or min(lags) < 1:
        raise ValueError(f"`lags` should be positive integers. Got lags={lags}")
    shocks = panel.frame[column].diff()
    return panel.with_columns(
        **{shock_label(column, lag): shocks.shift(lag) for lag in lags}
    )


def _instrument_matrix(instruments, n):
    if isinstance(instruments, pd.DataFrame):
        instruments = {c: instruments[c] for c in instruments.columns}
    names = tuple(instruments)
    if not names:
        raise ValueError("Two-stage least squares needs at least one instrument.")
    columns = [np.asarray(instruments[name], dtype=np.float64) for name in names]
    for name, values in zip(names, columns):
        if values.shape != (n,):
            raise ValueError(
                f"Instrument `{name}` should have shape ({n},). Got {values.shape}"
            )
    return names, np.column_stack(columns)


def two_stage_least_squares(
    design,
    endogenous,
    instruments,
    cov_type=covariance.CLASSICAL,
    lags=covariance.DEFAULT_LAGS,
):
    """Instruments one endogenous regressor of `design`.

    Stage one regresses the endogenous column on the instruments and the
    remaining (exogenous) columns; stage two replaces it by its fitted values.
    Residuals, and therefore the covariance, use the original regressors.

    Args:
        design: a `DesignMatrix` containing the endogenous column.
        endogenous: label of the endogenous column.
        instruments: mapping (or DataFrame) of excluded instrument name to
            values aligned with `design` rows.
        cov_type: One of `"classical"`, `"hc0"`, `"nw"`.
        lags: Newey-West lag truncation.

    Returns:
        a `FitResult`; `extras` holds `first_stage_f`, `first_stage_f_pvalue`,
        `weak_instruments`, `endogenous` and `instruments`.
    """
    cov_type = covariance.validate_cov_type(cov_type)
    names, z = _instrument_matrix(instruments, design.n)
    if endogenous in names:
        raise ValueError(
            f"Instruments must exclude the endogenous column `{endogenous}`."
        )
    design.index_of(endogenous)
    exogenous = design.without(endogenous)
    stage_one_x = np.column_stack([exogenous.x, z])
    stage_one = ols.ols_fit(
        DesignMatrix(
            dates=design.dates,
            x=stage_one_x,
            labels=exogenous.labels + names,
            y=design.column(endogenous),
        )
    )
    first_stage_f, first_stage_p = _first_stage_f(
        design.column(endogenous), exogenous.x, stage_one, len(names)
    )
    weak = bool(first_stage_f < WEAK_INSTRUMENT_F)
    if weak:
        logging.warning(
            "Weak instruments for `%s`: first-stage F=%.3f < %g",
            endogenous,
            first_stage_f,
            WEAK_INSTRUMENT_F,
        )

    fitted = design.column(endogenous) - stage_one.residuals
    second = ols.ols_fit(design.with_column(endogenous, fitted))
    x_hat = second.exog
    residuals = design.y - design.x @ second.params
    n, k = design.x.shape
    scale = float(residuals @ residuals) / (n - k)
    if cov_type == covariance.CLASSICAL:
        cov = covariance.classical_cov(second.xtx_inv, scale)
    elif cov_type == covariance.HC0:
        cov = covariance.hc0_cov(x_hat, residuals, xtx_inv=second.xtx_inv)
    else:
        cov = covariance.newey_west_cov(
            x_hat, residuals, lags=lags, xtx_inv=second.xtx_inv
        )
    bse, tvalues, pvalues, degenerate = ols.coefficient_tests(
        second.params, cov, n - k
    )
    rsquared, rsquared_adj, _, _ = ols.fit_statistics(
        design.y, residuals, k, design.has_intercept
    )
    fvalue, f_pvalue = _wald_slopes(second.params, cov, design, n - k)
    return dataclasses.replace(
        second,
        residuals=residuals,
        cov=cov,
        cov_type=f"2sls-{covariance.cov_label(cov_type, lags)}",
        bse=bse,
        tvalues=tvalues,
        pvalues=pvalues,
        degenerate=degenerate,
        rsquared=rsquared,
        rsquared_adj=rsquared_adj,
        fvalue=fvalue,
        f_pvalue=f_pvalue,
        scale=scale,
        extras={
            "endogenous": endogenous,
            "instruments": list(names),
            "first_stage_f": first_stage_f,
            "first_stage_f_pvalue": first_stage_p,
            "weak_instruments": weak,
        },
    )


def _first_stage_f(target, exogenous_x, unrestricted, n_instruments):
    ssr_u = float(unrestricted.residuals @ unrestricted.residuals)
    if exogenous_x.shape[1]:
        coefficients, *_ = np.linalg.lstsq(exogenous_x, target, rcond=None)
        restricted = target - exogenous_x @ coefficients
    else:
        restricted = target
    ssr_r = float(restricted @ restricted)
    df = unrestricted.df_resid
    if ssr_u == 0.0:
        return np.inf, 0.0
    f = max(ssr_r - ssr_u, 0.0) / n_instruments / (ssr_u / df)
    return f, float(stats.f.sf(f, n_instruments, df))


def _wald_slopes(params, cov, design, df_resid):
    slopes = [i for i, label in enumerate(design.labels) if label != INTERCEPT]
    if not slopes:
        return np.nan, np.nan
    b = params[slopes]
    v = cov[np.ix_(slopes, slopes)]
    try:
        statistic = float(b @ np.linalg.solve(v, b)) / len(slopes)
    except np.linalg.LinAlgError:
        return np.nan, np.nan
    return statistic, float(stats.f.sf(statistic, len(slopes), df_resid))
