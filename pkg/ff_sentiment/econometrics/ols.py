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
"""Ordinary least squares and coefficient inference."""

import dataclasses

import numpy as np
import pandas as pd
from scipy import linalg
from scipy import stats

from ff_sentiment.econometrics import covariance
from ff_sentiment.econometrics.specs import INTERCEPT

RANK_TOLERANCE = 1e-10


class RankDeficientError(ValueError):
    """Raised when a regressor is (numerically) a combination of earlier ones."""

    def __init__(self, label, ratio):
        self.label = label
        super().__init__(
            f"Design is rank deficient: column `{label}` depends on the columns "
            f"before it (singular value ratio {ratio:.3g} <= {RANK_TOLERANCE})"
        )


def significance_stars(p):
    """Returns `***`, `**`, `*` for p below 0.01, 0.05, 0.10, else ``."""
    if p is None or not np.isfinite(p):
        return ""
    if p < 0.01:
        return "***"
    if p < 0.05:
        return "**"
    if p < 0.10:
        return "*"
    return ""


@dataclasses.dataclass(frozen=True, eq=False)
class FitResult:
    """Coefficients, covariance and fit statistics of one estimation.

    `cov_type` names the estimator behind `cov`, `bse`, `tvalues` and
    `pvalues`: `classical`, `hc0` or `nw(<lags>)`.  `degenerate` flags
    coefficients with a zero standard error but a nonzero estimate; their
    p-value is reported as 0.  `extras` carries estimator-specific diagnostics
    such as the first-stage F of two-stage least squares.
    """

    labels: tuple
    params: np.ndarray
    residuals: np.ndarray
    cov: np.ndarray
    cov_type: str
    bse: np.ndarray
    tvalues: np.ndarray
    pvalues: np.ndarray
    degenerate: np.ndarray
    rsquared: float
    rsquared_adj: float
    fvalue: float
    f_pvalue: float
    nobs: int
    k: int
    scale: float
    xtx_inv: np.ndarray
    exog: np.ndarray
    dates: pd.DatetimeIndex = None
    extras: dict = dataclasses.field(default_factory=dict)

    @property
    def df_resid(self):
        return self.nobs - self.k

    @property
    def has_intercept(self):
        return INTERCEPT in self.labels

    def index_of(self, label):
        try:
            return self.labels.index(label)
        except ValueError:
            raise KeyError(f"Fit has no coefficient `{label}`. Got {self.labels}")

    def coefficient(self, label):
        """Returns `(estimate, standard error, t, p)` for `label`."""
        i = self.index_of(label)
        return (
            float(self.params[i]),
            float(self.bse[i]),
            float(self.tvalues[i]),
            float(self.pvalues[i]),
        )

    def conf_int(self, alpha=0.05):
        """Returns an `(k, 2)` array of Student-t confidence bounds."""
        if not 0 < alpha < 1:
            raise ValueError(f"`alpha` should be in (0, 1). Got alpha={alpha}")
        q = stats.t.ppf(1 - alpha / 2, self.df_resid)
        return np.column_stack([self.params - q * self.bse, self.params + q * self.bse])

    def predict(self, x):
        return np.asarray(x, dtype=np.float64) @ self.params

    def to_dict(self):
        """Returns a JSON-serializable summary at full precision."""
        return {
            "labels": list(self.labels),
            "params": self.params.tolist(),
            "bse": self.bse.tolist(),
            "tvalues": self.tvalues.tolist(),
            "pvalues": self.pvalues.tolist(),
            "degenerate": self.degenerate.tolist(),
            "cov_type": self.cov_type,
            "rsquared": self.rsquared,
            "rsquared_adj": self.rsquared_adj,
            "fvalue": self.fvalue,
            "f_pvalue": self.f_pvalue,
            "nobs": self.nobs,
            "k": self.k,
            "extras": dict(self.extras),
        }


def _check_rank(x, labels):
    singular_values = np.linalg.svd(x, compute_uv=False)
    if singular_values[0] > 0 and (
        singular_values[-1] > RANK_TOLERANCE * singular_values[0]
    ):
        return
    for j in range(x.shape[1]):
        prefix = np.linalg.svd(x[:, : j + 1], compute_uv=False)
        ratio = prefix[-1] / prefix[0] if prefix[0] > 0 else 0.0
        if ratio <= RANK_TOLERANCE:
            raise RankDeficientError(labels[j], ratio)


def coefficient_tests(params, cov, df_resid):
    """Standard errors, t statistics and two-sided Student-t p-values."""
    variances = np.clip(np.diag(cov), 0.0, None)
    bse = np.sqrt(variances)
    tvalues = np.zeros_like(params)
    pvalues = np.ones_like(params)
    positive = bse > 0
    tvalues[positive] = params[positive] / bse[positive]
    pvalues[positive] = 2.0 * stats.t.sf(np.abs(tvalues[positive]), df_resid)
    degenerate = ~positive & (params != 0)
    tvalues[degenerate] = np.sign(params[degenerate]) * np.inf
    pvalues[degenerate] = 0.0
    return bse, tvalues, pvalues, degenerate


def fit_statistics(y, residuals, k, has_intercept):
    """Returns `(R^2, adjusted R^2, F, p(F))` under the classical convention."""
    n = len(y)
    ssr = float(residuals @ residuals)
    centered = y - y.mean() if has_intercept else y
    tss = float(centered @ centered)
    if has_intercept and np.ptp(y) == 0.0:
        tss = 0.0
    if tss == 0.0:
        rsquared = 0.0
    else:
        rsquared = 1.0 - ssr / tss
    if has_intercept:
        rsquared = min(max(rsquared, 0.0), 1.0)
    constant = 1 if has_intercept else 0
    rsquared_adj = 1.0 - (1.0 - rsquared) * (n - constant) / (n - k)
    slopes = k - constant
    if slopes == 0:
        return rsquared, rsquared_adj, np.nan, np.nan
    if rsquared >= 1.0:
        return rsquared, rsquared_adj, np.inf, 0.0
    fvalue = (rsquared / slopes) / ((1.0 - rsquared) / (n - k))
    return rsquared, rsquared_adj, fvalue, float(stats.f.sf(fvalue, slopes, n - k))


def ols_fit(design):
    """Fits `design.y` on `design.x` by least squares.

    The solution comes from the economic QR decomposition `X = QR`, solving
    `R b = Q'y`; the normal equations are never formed.  The returned
    covariance is the classical `s^2 (X'X)^-1`.

    Args:
        design: a `DesignMatrix`.

    Returns:
        a `FitResult` with classical inference.

    Raises:
        RankDeficientError: when the smallest singular value of X is at most
            1e-10 times the largest, naming the first dependent column.
    """
    x = np.array(design.x, dtype=np.float64, copy=True)
    y = np.array(design.y, dtype=np.float64, copy=True)
    n, k = x.shape
    _check_rank(x, design.labels)
    q, r = linalg.qr(x, mode="economic")
    params = linalg.solve_triangular(r, q.T @ y)
    residuals = y - x @ params
    r_inv = linalg.solve_triangular(r, np.eye(k))
    xtx_inv = r_inv @ r_inv.T
    scale = float(residuals @ residuals) / (n - k)
    cov = covariance.classical_cov(xtx_inv, scale)
    bse, tvalues, pvalues, degenerate = coefficient_tests(params, cov, n - k)
    has_intercept = INTERCEPT in design.labels
    rsquared, rsquared_adj, fvalue, f_pvalue = fit_statistics(
        y, residuals, k, has_intercept
    )
    return FitResult(
        labels=tuple(design.labels),
        params=params,
        residuals=residuals,
        cov=cov,
        cov_type=covariance.CLASSICAL,
        bse=bse,
        tvalues=tvalues,
        pvalues=pvalues,
        degenerate=degenerate,
        rsquared=rsquared,
        rsquared_adj=rsquared_adj,
        fvalue=fvalue,
        f_pvalue=f_pvalue,
        nobs=n,
        k=k,
        scale=scale,
        xtx_inv=xtx_inv,
        exog=x,
        dates=design.dates,
    )


def inference(fit, cov_choice=covariance.NEWEY_WEST, lags=covariance.DEFAULT_LAGS):
    """Recomputes standard errors, t and p under `cov_choice`.

    Args:
        fit: a `FitResult`.
        cov_choice: One of `"classical"`, `"hc0"`, `"nw"`.  Defaults to `"nw"`.
        lags: Newey-West lag truncation.  Defaults to 5.

    Returns:
        a new `FitResult`; coefficients, residuals and the classical F test are
        unchanged.
    """
    cov_choice = covariance.validate_cov_type(cov_choice)
    if cov_choice == covariance.CLASSICAL:
        cov = covariance.classical_cov(fit.xtx_inv, fit.scale)
    elif cov_choice == covariance.HC0:
        cov = covariance.hc0_cov(fit.exog, fit.residuals, xtx_inv=fit.xtx_inv)
    else:
        cov = covariance.newey_west_cov(
            fit.exog, fit.residuals, lags=lags, xtx_inv=fit.xtx_inv
        )
    bse, tvalues, pvalues, degenerate = coefficient_tests(
        fit.params, cov, fit.df_resid
    )
    return dataclasses.replace(
        fit,
        cov=cov,
        cov_type=covariance.cov_label(cov_choice, lags),
        bse=bse,
        tvalues=tvalues,
        pvalues=pvalues,
        degenerate=degenerate,
    )
