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
"""Coefficient covariance estimators.

All estimators take the regressor matrix `x` (n x k) and the residual vector
and return a symmetric k x k matrix.  The heteroskedasticity and
autocorrelation consistent estimator is

    cov = (X'X)^-1 [G_0 + sum_l w_l (G_l + G_l')] (X'X)^-1,

with `u_t = x_t e_t`, `G_l = sum_{t>l} u_t u_{t-l}'` and Bartlett weights
`w_l = 1 - l / (lags + 1)`.  No degrees-of-freedom correction is applied, so
`lags=0` is the White (HC0) estimator.
"""

import numpy as np
from scipy import linalg

CLASSICAL = "classical"
HC0 = "hc0"
NEWEY_WEST = "nw"
COV_TYPES = (CLASSICAL, HC0, NEWEY_WEST)

DEFAULT_LAGS = 5


def xtx_inverse(x):
    """Returns `(X'X)^-1` from the economic QR decomposition of `x`."""
    _, r = linalg.qr(x, mode="economic")
    r_inv = linalg.solve_triangular(r, np.eye(r.shape[0]))
    return r_inv @ r_inv.T


def _symmetrize(matrix):
    return (matrix + matrix.T) / 2.0


def classical_cov(xtx_inv, scale):
    """Returns `s^2 (X'X)^-1`."""
    return _symmetrize(scale * xtx_inv)


def newey_west_cov(x, residuals, lags=DEFAULT_LAGS, xtx_inv=None):
    """Newey-West covariance with Bartlett weights.

    Args:
        x: regressor matrix of shape `(n, k)`.
        residuals: residual vector of length n.
        lags: lag truncation, `0 <= lags < n`.  Defaults to 5.
        xtx_inv: optional precomputed `(X'X)^-1`.

    Returns:
        the `(k, k)` covariance matrix.
    """
    x = np.asarray(x, dtype=np.float64)
    residuals = np.asarray(residuals, dtype=np.float64)
    n = x.shape[0]
    if lags < 0:
        raise ValueError(f"`lags` should be non-negative. Got lags={lags}")
    if lags >= n:
        raise ValueError(
            f"`lags` should be smaller than the number of rows n={n}. Got lags={lags}"
        )
    if xtx_inv is None:
        xtx_inv = xtx_inverse(x)
    scores = x * residuals[:, None]
    meat = scores.T @ scores
    for lag in range(1, lags + 1):
        weight = 1.0 - lag / (lags + 1.0)
        gamma = scores[lag:].T @ scores[:-lag]
        meat += weight * (gamma + gamma.T)
    return _symmetrize(xtx_inv @ meat @ xtx_inv)


def hc0_cov(x, residuals, xtx_inv=None):
    """White heteroskedasticity-robust covariance."""
    return newey_west_cov(x, residuals, lags=0, xtx_inv=xtx_inv)


def validate_cov_type(cov_type):
    cov_type = cov_type.lower()
    if cov_type not in COV_TYPES:
        raise ValueError(
            f"`cov_type` should be one of {COV_TYPES}. Got cov_type={cov_type}"
        )
    return cov_type


def cov_label(cov_type, lags=DEFAULT_LAGS):
    if cov_type == NEWEY_WEST:
        return f"nw({lags})"
    return cov_type
