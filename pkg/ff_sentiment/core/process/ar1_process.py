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
import numpy as np
from scipy import signal

from ff_sentiment.core.process.process import Process
from ff_sentiment.core.process.process import register_process


@register_process
class Ar1Process(Process):
    """Ar1Process draws a stationary Gaussian AR(1) series.

    The series is `mean + x_t` with `x_t = phi * x_{t-1} + e_t`.  `stddev` is the
    marginal (stationary) standard deviation of the series, so that simulated
    descriptive statistics can be matched directly against empirical targets; the
    innovation scale is `stddev * sqrt(1 - phi**2)`.  The first value is drawn from
    the stationary distribution, so no burn-in is needed.

    Args:
        mean: mean of the series.
        stddev: marginal standard deviation of the series, must be >= 0.
        phi: AR(1) coefficient, must satisfy `|phi| < 1`.  Defaults to 0, which
            gives an i.i.d. normal series.
        min_value: values below min_value are clipped to min_value.
        max_value: values above max_value are clipped to max_value.

    Usage:
    ```python
    sentiment = ff_sentiment.core.Ar1Process(
        mean=0.05, stddev=0.07, phi=0.5, min_value=-1.0, max_value=1.0
    )
    s_t = sentiment(724, np.random.default_rng(7))
    ```
    """

    def __init__(self, mean, stddev, phi=0.0, min_value=None, max_value=None):
        if stddev < 0:
            raise ValueError(f"`stddev` must be >= 0. Got stddev={stddev}")
        if not abs(phi) < 1:
            raise ValueError(f"`phi` must satisfy |phi| < 1. Got phi={phi}")
        if min_value is not None and max_value is not None and min_value > max_value:
            raise ValueError(
                "`min_value` must be <= `max_value`. "
                f"Got min_value={min_value}, max_value={max_value}"
            )
        self.mean = mean
        self.stddev = stddev
        self.phi = phi
        self.min_value = min_value
        self.max_value = max_value

    def __call__(self, n, rng):
        shocks = rng.standard_normal(n)
        innovations = self.stddev * np.sqrt(1.0 - self.phi**2) * shocks
        if n > 0:
            innovations[0] = self.stddev * shocks[0]
        values = self.mean + signal.lfilter([1.0], [1.0, -self.phi], innovations)
        if self.min_value is not None or self.max_value is not None:
            values = np.clip(values, self.min_value, self.max_value)
        return values

    def get_config(self):
        return {
            "mean": self.mean,
            "stddev": self.stddev,
            "phi": self.phi,
            "min_value": self.min_value,
            "max_value": self.max_value,
        }
