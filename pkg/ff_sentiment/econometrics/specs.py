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
"""Declarative descriptions of the regressions estimated on a panel."""

import dataclasses

from ff_sentiment.panel.columns import PANEL

BASELINE = "baseline"
AUGMENTED = "augmented"
INTERACTION = "interaction"
CUSTOM = "custom"
SPEC_NAMES = (BASELINE, AUGMENTED, INTERACTION, CUSTOM)

INTERCEPT = "const"

FACTOR_REGRESSORS = (PANEL.MKT_RF, PANEL.SMB, PANEL.HML, PANEL.RMW, PANEL.CMA)
BASELINE_REGRESSORS = FACTOR_REGRESSORS + (PANEL.DGS10_DIFF,)
AUGMENTED_REGRESSORS = BASELINE_REGRESSORS + (PANEL.S_T,)
INTERACTION_REGRESSORS = AUGMENTED_REGRESSORS + (PANEL.HV_T, PANEL.S_T_X_HV_T)
REGRESSORS = INTERACTION_REGRESSORS

_NAMED = {
    BASELINE: BASELINE_REGRESSORS,
    AUGMENTED: AUGMENTED_REGRESSORS,
    INTERACTION: INTERACTION_REGRESSORS,
}


@dataclasses.dataclass(frozen=True)
class RegressionSpec:
    """Which regressors enter a model, in order.

    Use the named constructors for the three standard models:

    ```python
    RegressionSpec.baseline()     # five factors + dgs10_diff + const
    RegressionSpec.augmented()    # baseline + s_t
    RegressionSpec.interaction()  # augmented + hv_t + s_t_x_hv_t
    ```

    Args:
        name: One of `"baseline"`, `"augmented"`, `"interaction"`, `"custom"`.
        regressors: ordered regressor names drawn from `REGRESSORS`.
        intercept: whether a constant column is prepended.  Defaults to True.
    """

    name: str
    regressors: tuple
    intercept: bool = True

    def __post_init__(self):
        regressors = tuple(self.regressors)
        object.__setattr__(self, "regressors", regressors)
        if self.name not in SPEC_NAMES:
            raise ValueError(
                f"`name` should be one of {SPEC_NAMES}. Got name={self.name}"
            )
        if self.name in _NAMED and (
            regressors != _NAMED[self.name] or not self.intercept
        ):
            raise ValueError(
                f"The {self.name} model has fixed regressors {_NAMED[self.name]} "
                f"and an intercept. Got regressors={regressors}, "
                f"intercept={self.intercept}. Use RegressionSpec.custom() instead."
            )
        unknown = [r for r in regressors if r not in REGRESSORS]
        if unknown:
            raise ValueError(
                f"Unknown regressors {unknown}. Expected names from {REGRESSORS}"
            )
        if len(set(regressors)) != len(regressors):
            raise ValueError(f"Regressors must be unique. Got {regressors}")
        if not regressors:
            raise ValueError("A regression needs at least one regressor.")
        if PANEL.S_T_X_HV_T in regressors and not (
            PANEL.S_T in regressors and PANEL.HV_T in regressors
        ):
            raise ValueError(
                "The interaction `s_t_x_hv_t` requires both `s_t` and `hv_t`. "
                f"Got regressors={regressors}"
            )

    @classmethod
    def baseline(cls):
        return cls(BASELINE, BASELINE_REGRESSORS)

    @classmethod
    def augmented(cls):
        return cls(AUGMENTED, AUGMENTED_REGRESSORS)

    @classmethod
    def interaction(cls):
        return cls(INTERACTION, INTERACTION_REGRESSORS)

    @classmethod
    def custom(cls, regressors, intercept=True):
        return cls(CUSTOM, tuple(regressors), intercept)

    @classmethod
    def from_name(cls, name):
        if name not in _NAMED:
            raise ValueError(
                f"`name` should be one of {tuple(_NAMED)}. Got name={name}"
            )
        return cls(name, _NAMED[name])

    @property
    def labels(self):
        return ((INTERCEPT,) if self.intercept else ()) + self.regressors

    @property
    def k(self):
        return len(self.labels)

    @property
    def required_columns(self):
        """Panel columns a row must carry to enter this regression."""
        columns = []
        for regressor in self.regressors:
            needed = (
                (PANEL.S_T, PANEL.HV_T)
                if regressor == PANEL.S_T_X_HV_T
                else (regressor,)
            )
            columns.extend(c for c in needed if c not in columns)
        return tuple(columns)

    def get_config(self):
        return {
            "name": self.name,
            "regressors": list(self.regressors),
            "intercept": self.intercept,
        }

    @classmethod
    def from_config(cls, config):
        return cls(**config)
