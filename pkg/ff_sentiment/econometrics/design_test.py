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
import pandas as pd

from ff_sentiment import econometrics
from ff_sentiment import panel
from ff_sentiment import testing


def _panel(n=30, s_t=0.04, hv_t=0.03, seed=0):
    rng = np.random.default_rng(seed)
    dates = pd.bdate_range("2021-01-04", periods=n, name="date")
    frame = pd.DataFrame(
        {name: rng.normal(0, 0.01, n) for name in panel.FACTORS.VALUES}, index=dates
    )
    frame["dgs10_diff"] = rng.normal(0, 0.05, n)
    frame["s_t"] = s_t
    frame["hv_t"] = hv_t
    returns = pd.DataFrame({"AAA": rng.normal(0, 0.01, n)}, index=dates)
    return panel.MergedPanel(frame=frame, excess_returns=returns)


class BuildDesignTest(testing.TestCase):
    def test_interaction_cell_is_raw_product(self):
        design = econometrics.build_design(
            _panel(), econometrics.RegressionSpec.interaction(), "AAA"
        )
        self.assertAllClose(design.column("s_t_x_hv_t"), np.full(30, 0.0012))
        self.assertEqual(design.labels[-1], "s_t_x_hv_t")

    def test_baseline_has_seven_columns(self):
        design = econometrics.build_design(
            _panel(), econometrics.RegressionSpec.baseline(), "AAA"
        )
        self.assertEqual(design.x.shape, (30, 7))
        self.assertAllEqual(design.column("const"), np.ones(30))

    def test_insufficient_rows(self):
        with self.assertRaisesRegex(econometrics.InsufficientDataError, "insufficient"):
            econometrics.build_design(
                _panel(n=5), econometrics.RegressionSpec.interaction(), "AAA"
            )

    def test_missing_regressor(self):
        merged = _panel()
        merged = panel.MergedPanel(
            frame=merged.frame.drop(columns=["hv_t"]),
            excess_returns=merged.excess_returns,
        )
        with self.assertRaisesRegex(ValueError, "missing regressor"):
            econometrics.build_design(
                merged, econometrics.RegressionSpec.interaction(), "AAA"
            )

    def test_unknown_asset(self):
        with self.assertRaisesRegex(ValueError, "Unknown asset"):
            econometrics.build_design(
                _panel(), econometrics.RegressionSpec.baseline(), "ZZZ"
            )


class DesignMatrixTest(testing.TestCase):
    def test_non_finite_rejected(self):
        x = np.ones((5, 2))
        x[2, 1] = np.nan
        with self.assertRaisesRegex(ValueError, "non-finite"):
            econometrics.DesignMatrix(None, x, ("const", "a"), np.zeros(5))

    def test_duplicate_labels_rejected(self):
        with self.assertRaisesRegex(ValueError, "unique"):
            econometrics.DesignMatrix(None, np.ones((5, 2)), ("a", "a"), np.zeros(5))

    def test_take_copies_rows(self):
        x = np.arange(12.0).reshape(6, 2)
        design = econometrics.DesignMatrix(None, x, ("a", "b"), np.arange(6.0))
        head = design.take(slice(0, 3))
        head.x[0, 0] = 100.0
        self.assertEqual(design.x[0, 0], 0.0)
        self.assertEqual(head.n, 3)
