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
"""Converter functions between the units input files may be written in.

Internally every return-like quantity is a decimal fraction per day; yields and
their daily changes stay in percent points.
"""

import numpy as np


def _percent_to_fraction(values):
    return values / 100.0


def _fraction_to_percent(values):
    return values * 100.0


def _no_op(values):
    return values


TO_FRACTION_CONVERTERS = {
    "percent": _percent_to_fraction,
    "fraction": _no_op,
}

FROM_FRACTION_CONVERTERS = {
    "percent": _fraction_to_percent,
    "fraction": _no_op,
}

UNITS = tuple(TO_FRACTION_CONVERTERS)


def validate_unit(unit, param_name="unit"):
    unit = unit.lower()
    if unit not in TO_FRACTION_CONVERTERS:
        raise ValueError(
            f"`{param_name}` should be one of {UNITS}. Got {param_name}={unit}"
        )
    return unit


def convert_units(values, source, target):
    """Converts values between `"percent"` and `"fraction"` units.

    Usage:

    ```python
    convert_units([0.85, -0.30], source="percent", target="fraction")
    # array([ 0.0085, -0.003 ])
    ```

    Args:
        values: array-like of numbers written in `source` units.
        source: One of `"percent"`, `"fraction"`.
        target: One of `"percent"`, `"fraction"`.

    Returns:
        a float64 numpy array in `target` units.
    """
    source = validate_unit(source, "source")
    target = validate_unit(target, "target")
    values = np.asarray(values, dtype=np.float64)
    if source == target:
        return values
    return FROM_FRACTION_CONVERTERS[target](TO_FRACTION_CONVERTERS[source](values))
