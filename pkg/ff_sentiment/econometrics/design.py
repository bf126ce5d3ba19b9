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
"""Design matrices: regressors and response aligned on panel dates."""

import dataclasses

import numpy as np
import pandas as pd

from ff_sentiment.econometrics.specs import INTERCEPT


class InsufficientDataError(ValueError):
    """Raised when fewer rows are available than an estimation needs."""


@dataclasses.dataclass(frozen=True, eq=False)
class DesignMatrix:
    """An `n x k` regressor matrix with labels and the response it explains.

    Attributes:
        dates: row dates, length n.
        x: float64 array of shape `(n, k)`.
        labels: column labels, length k, unique.
        y: float64 response of length n.
    """

    dates: pd.DatetimeIndex
    x: np.ndarray
    labels: tuple
    y: np.ndarray

    def __post_init__(self):
        x = np.asarray(self.x, dtype=np.float64)
        y = np.asarray(self.y, dtype=np.float64)
        labels = tuple(self.labels)
        if x.ndim != 2:
            raise ValueError(f"`x` should be 2-dimensional. Got x.shape={x.shape}")
        n, k = x.shape
        if y.shape != (n,):
            raise ValueError(
                f"`y` should have shape ({n},) to match `x`. Got y.shape={y.shape}"
            )
        if len(labels) != k:
            raise ValueError(
                f"Expected {k} labels for {k} columns. Got labels={labels}"
            )
        if len(set(labels)) != k:
            raise ValueError(f"Column labels must be unique. Got labels={labels}")
        if not (np.isfinite(x).all() and np.isfinite(y).all()):
            raise ValueError("Design matrix contains missing or non-finite values.")
        if n <= k:
            raise InsufficientDataError(
                f"insufficient rows: need more than {k} rows for {k} columns. "
                f"Got n={n}"
            )
        dates = pd.DatetimeIndex(self.dates) if self.dates is not None else None
        if dates is not None and len(dates) != n:
            raise ValueError(f"Expected {n} dates. Got {len(dates)}")
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "y", y)
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "dates", dates)

    @property
    def n(self):
        return self.x.shape[0]

    @property
    def k(self):
        return self.x.shape[1]

    @property
    def has_intercept(self):
        return INTERCEPT in self.labels

    def index_of(self, label):
        try:
            return self.labels.index(label)
        except ValueError:
            raise KeyError(f"Design has no column `{label}`. Got {self.labels}")

    def column(self, label):
        return self.x[:, self.index_of(label)]

    def take(self, rows):
        """Returns the design restricted to positional `rows`, as copies."""
        return DesignMatrix(
            dates=self.dates[rows] if self.dates is not None else None,
            x=self.x[rows].copy(),
            labels=self.labels,
            y=self.y[rows].copy(),
        )

    def with_column(self, label, values):
        """Returns a design with column `label` replaced by `values`."""
        x = self.x.copy()
        x[:, self.index_of(label)] = values
        return dataclasses.replace(self, x=x)

    def without(self, label):
        keep = [i for i, name in enumerate(self.labels) if name != label]
        return dataclasses.replace(
            self, x=self.x[:, keep], labels=tuple(self.labels[i] for i in keep)
        )


def build_design(panel, spec, asset):
    """Assembles the design of `spec` for `asset` over every panel row.

    The interaction column is the raw product `s_t * hv_t`; nothing is centered.

    Args:
        panel: a `MergedPanel`.
        spec: a `RegressionSpec`.
        asset: the asset whose excess return is the response.

    Returns:
        a `DesignMatrix` with columns in `spec.labels` order.
    """
    missing = [r for r in spec.regressors if not panel.has_column(r)]
    if missing:
        raise ValueError(
            f"Panel is missing regressor(s) {missing} required by the "
            f"{spec.name} model"
        )
    if asset not in panel.assets:
        raise ValueError(f"Unknown asset {asset!r}. Available: {panel.assets}")
    n = len(panel)
    if n <= spec.k:
        raise InsufficientDataError(
            f"insufficient rows: the {spec.name} model has k={spec.k} columns. "
            f"Got n={n}"
        )
    columns = [np.ones(n)] if spec.intercept else []
    columns.extend(panel.column(r) for r in spec.regressors)
    return DesignMatrix(
        dates=panel.dates,
        x=np.column_stack(columns),
        labels=spec.labels,
        y=panel.excess_return(asset),
    )
