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

from ff_sentiment.core.process.process import Process
from ff_sentiment.core.process.process import register_process


@register_process
class ConstantProcess(Process):
    """ConstantProcess returns the same value for every day.

    This is useful for series that are held fixed in a simulation, such as a
    flat daily risk-free rate.

    Args:
        value: the value to return for every day.

    Usage:
    ```python
    rf = ff_sentiment.core.ConstantProcess(0.0001)
    rf(3, np.random.default_rng(0))
    # array([0.0001, 0.0001, 0.0001])
    ```
    """

    def __init__(self, value):
        self.value = value

    def __call__(self, n, rng=None):
        return np.full(n, float(self.value), dtype=np.float64)

    def get_config(self):
        return {"value": self.value}
