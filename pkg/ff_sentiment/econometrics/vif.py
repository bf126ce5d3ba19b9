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
"""Variance inflation factors."""

import dataclasses

import numpy as np
from absl import logging

from ff_sentiment.econometrics.specs import INTERCEPT

VIF_CAP = 1e6
VIF_THRESHOLDS = (5.0, 10.0)


@dataclasses.dataclass(frozen=True, eq=False)
class VifReport:
    labels: tuple
    values: np.ndarray

    @property
    def infinite(self):
        return np.isinf(self.values)

    def as_dict(self):
        return dict(zip(self.labels, self.values.tolist()))

    def warnings(self, thresholds=VIF_THRESHOLDS):
        """Returns one message per regressor above the lowest threshold."""
        messages = []
        for label, value in zip(self.labels, self.values):
            exceeded = [t for t in thresholds if value > t]
            if exceeded:
                messages.append(
                    f"VIF of `{label}` is {value:.4g} (> {max(exceeded):g})"
                )
        return messages


def vif(design):
    """Computes `1 / (1 - R_j^2)` for every non-intercept column.

    `R_j^2` comes from regressing column j on the remaining columns plus an
    intercept.  Values above 1e6 and constant columns are reported as infinite.

    Args:
        design: a `DesignMatrix` with at least two non-intercept columns.

    Returns:
        a `VifReport`.
    """
    keep = [i for i, label in enumerate(design.labels) if label != INTERCEPT]
    if len(keep) < 2:
        raise ValueError(
            "VIF needs at least two regressors besides the intercept. "
            f"Got {[design.labels[i] for i in keep]}"
        )
    x = design.x[:, keep]
    n = x.shape[0]
    values = np.empty(len(keep))
    for j in range(len(keep)):
        target = x[:, j]
        centered = target - target.mean()
        tss = float(centered @ centered)
        if np.ptp(target) == 0.0 or tss == 0.0:
            values[j] = np.inf
            continue
        others = np.column_stack([np.ones(n), np.delete(x, j, axis=1)])
        coefficients, *_ = np.linalg.lstsq(others, target, rcond=None)
        residual = target - others @ coefficients
        rsquared = 1.0 - float(residual @ residual) / tss
        if rsquared >= 1.0:
            values[j] = np.inf
            continue
        value = 1.0 / (1.0 - rsquared)
        values[j] = np.inf if value > VIF_CAP else max(value, 1.0)
    report = VifReport(tuple(design.labels[i] for i in keep), values)
    for message in report.warnings():
        logging.warning(message)
    return report
