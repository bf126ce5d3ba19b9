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
"""Brute-force reference estimators.

These evaluate the textbook formulas with explicit Python loops.  They share
no code with `ff_sentiment.econometrics` and exist to cross-check it.
"""

import numpy as np


def _as_rows(matrix):
    return [[float(v) for v in row] for row in np.asarray(matrix, dtype=np.float64)]


def _cross_products(x):
    n, k = len(x), len(x[0])
    return [
        [sum(x[t][i] * x[t][j] for t in range(n)) for j in range(k)]
        for i in range(k)
    ]


def _solve(a, b):
    """Gaussian elimination with partial pivoting on copies of `a` and `b`."""
    size = len(a)
    a = [row[:] for row in a]
    b = b[:]
    scale = max(abs(v) for row in a for v in row) or 1.0
    for column in range(size):
        pivot = max(range(column, size), key=lambda r: abs(a[r][column]))
        if abs(a[pivot][column]) <= 1e-14 * scale:
            raise ValueError("singular system: the normal equations are not invertible")
        a[column], a[pivot] = a[pivot], a[column]
        b[column], b[pivot] = b[pivot], b[column]
        for row in range(column + 1, size):
            factor = a[row][column] / a[column][column]
            for j in range(column, size):
                a[row][j] -= factor * a[column][j]
            b[row] -= factor * b[column]
    solution = [0.0] * size
    for row in reversed(range(size)):
        total = b[row] - sum(a[row][j] * solution[j] for j in range(row + 1, size))
        solution[row] = total / a[row][row]
    return solution


def _inverse(a):
    size = len(a)
    columns = []
    for j in range(size):
        unit = [1.0 if i == j else 0.0 for i in range(size)]
        columns.append(_solve(a, unit))
    return [[columns[j][i] for j in range(size)] for i in range(size)]


def _matmul(a, b):
    return [
        [sum(a[i][m] * b[m][j] for m in range(len(b))) for j in range(len(b[0]))]
        for i in range(len(a))
    ]


def brute_force_ols(x, y):
    """Solves the normal equations `X'X b = X'y` by Gaussian elimination.

    Args:
        x: regressor matrix of shape `(n, k)`.
        y: response of length n.

    Returns:
        the coefficient vector as a numpy array.
    """
    x = _as_rows(x)
    y = [float(v) for v in np.asarray(y, dtype=np.float64)]
    n, k = len(x), len(x[0])
    xty = [sum(x[t][j] * y[t] for t in range(n)) for j in range(k)]
    return np.array(_solve(_cross_products(x), xty))


def brute_force_hac(x, residuals, lags):
    """Evaluates the Bartlett-weighted sandwich covariance term by term.

    Uses the same convention as `newey_west_cov`: no 1/n scaling and no
    degrees-of-freedom correction, so `lags=0` is the HC0 form.
    """
    x = _as_rows(x)
    e = [float(v) for v in np.asarray(residuals, dtype=np.float64)]
    n, k = len(x), len(x[0])
    if lags < 0 or lags >= n:
        raise ValueError(f"`lags` should be in [0, {n}). Got lags={lags}")
    meat = [[0.0] * k for _ in range(k)]
    for t in range(n):
        for i in range(k):
            for j in range(k):
                meat[i][j] += e[t] * e[t] * x[t][i] * x[t][j]
    for lag in range(1, lags + 1):
        weight = 1.0 - lag / (lags + 1.0)
        for t in range(lag, n):
            for i in range(k):
                for j in range(k):
                    meat[i][j] += (
                        weight
                        * e[t]
                        * e[t - lag]
                        * (x[t][i] * x[t - lag][j] + x[t - lag][i] * x[t][j])
                    )
    bread = _inverse(_cross_products(x))
    return np.array(_matmul(_matmul(bread, meat), bread))
