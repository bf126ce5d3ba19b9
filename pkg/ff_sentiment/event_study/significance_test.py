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
import dataclasses

import numpy as np
import pandas as pd
from scipy import stats

from ff_sentiment import event_study
from ff_sentiment import simulation
from ff_sentiment import testing


def _abnormal(asset, values, variance=None):
    values = np.asarray(values, dtype=np.float64)
    if variance is None:
        variance = np.ones(len(values))
    return event_study.AbnormalReturns(
        asset=asset,
        event_time=np.arange(len(values)),
        dates=pd.DatetimeIndex([pd.NaT] * len(values)),
        values=values,
        forecast_variance=np.asarray(variance, dtype=np.float64),
    )


class BmpTestTest(testing.TestCase):
    def test_identical_standardized_cars(self):
        abnormals = [_abnormal(a, [0.01, 0.02]) for a in "ABC"]
        with self.assertRaisesRegex(ValueError, "zero cross-sectional variance"):
            event_study.bmp_test(abnormals, horizon=1)

    def test_symmetric_cars(self):
        abnormals = [
            _abnormal("A", [0.01, 0.02]),
            _abnormal("B", [-0.01, -0.02]),
            _abnormal("C", [0.03, 0.0]),
            _abnormal("D", [-0.03, 0.0]),
        ]
        result = event_study.bmp_test(abnormals, horizon=1)
        self.assertAllClose(result.z, 0.0, rtol=0, atol=1e-15)
        self.assertAllClose(result.pvalue, 1.0)
        self.assertEqual(result.n_assets, 4)

    def test_hand_computed_statistic(self):
        abnormals = [
            _abnormal("A", [0.02, 0.02], variance=[1.0, 3.0]),
            _abnormal("B", [0.01, 0.0], variance=[0.5, 0.5]),
            _abnormal("C", [0.0, 0.03], variance=[2.0, 2.0]),
        ]
        scars = np.array([0.04 / 2.0, 0.01 / 1.0, 0.03 / 2.0])
        z = scars.mean() * np.sqrt(3) / scars.std(ddof=1)
        result = event_study.bmp_test(abnormals, horizon=1)
        self.assertAllClose(result.z, z, rtol=1e-12, atol=0)
        self.assertAllClose(result.pvalue, 2 * stats.norm.sf(z), rtol=1e-12, atol=0)

    def test_missing_assets_are_skipped(self):
        abnormals = [
            _abnormal("A", [0.01, 0.02]),
            _abnormal("B", [np.nan, 0.0]),
            _abnormal("C", [0.02, 0.0]),
        ]
        self.assertEqual(event_study.bmp_test(abnormals, horizon=1).n_assets, 2)

    def test_needs_two_assets(self):
        with self.assertRaisesRegex(ValueError, "at least 2 assets"):
            event_study.bmp_test([_abnormal("A", [0.01, 0.02])], horizon=1)

    def test_invariant_to_return_scale(self):
        config = simulation.SimulationConfig(
            n_days=200, assets=("A", "B", "C", "D"), seed=8
        )
        panel, _ = simulation.generate_panel(config)
        scaled = dataclasses.replace(panel, excess_returns=panel.excess_returns * 3.0)
        window = event_study.EventWindowConfig(panel.dates[150])
        z = [
            event_study.run_event_study(p, window).models["augmented"].bmp["bmp_z"]
            for p in (panel, scaled)
        ]
        self.assertAllClose(z[0], z[1], rtol=1e-8, atol=0)


class PairedTTest(testing.TestCase):
    def test_known_values(self):
        t, p_two, p_one = event_study.paired_t([1.0, 2.0, 3.0])
        self.assertAllClose(t, 2.0 * np.sqrt(3.0), rtol=1e-12, atol=0)
        self.assertAllClose(p_two, 2 * stats.t.sf(t, 2), rtol=1e-12, atol=0)
        self.assertAllClose(p_one, stats.t.cdf(t, 2), rtol=1e-12, atol=0)

    def test_zero_differences(self):
        self.assertEqual(event_study.paired_t(np.zeros(4)), (0.0, 1.0, 0.5))

    def test_too_few(self):
        self.assertTrue(np.all(np.isnan(event_study.paired_t([1.0]))))


class CompareModelsTest(testing.TestCase):
    def test_identical_models(self):
        rng = np.random.default_rng(2)
        abnormal = {a: _abnormal(a, rng.normal(0, 0.01, 5)) for a in "ABC"}
        frame = event_study.compare_models(abnormal, abnormal)
        self.assertLen(frame, 5)
        self.assertAllEqual(frame["difference"], np.zeros(5))
        self.assertAllEqual(frame["paired_t"], np.zeros(5))
        self.assertAllEqual(frame["p_two_sided"], np.ones(5))
        self.assertFalse(frame["improved"].any())

    def test_smaller_absolute_cars_improve(self):
        baseline = {
            "A": _abnormal("A", [0.02, 0.01]),
            "B": _abnormal("B", [-0.03, 0.0]),
            "C": _abnormal("C", [0.01, 0.01]),
        }
        augmented = {
            "A": _abnormal("A", [0.01, 0.0]),
            "B": _abnormal("B", [-0.01, 0.0]),
            "C": _abnormal("C", [0.005, 0.01]),
        }
        frame = event_study.compare_models(baseline, augmented, start=0)
        self.assertTrue(frame.loc[0, "improved"])
        self.assertAllClose(
            frame.loc[0, "mean_abs_car_baseline"], 0.02, rtol=0, atol=1e-15
        )
        self.assertLess(frame.loc[0, "paired_t"], 0)
        self.assertLess(frame.loc[0, "p_one_sided"], 0.5)

    def test_start_restricts_horizons(self):
        abnormal = {a: _abnormal(a, [0.01, 0.02, 0.03]) for a in "AB"}
        frame = event_study.compare_models(abnormal, abnormal, start=1)
        self.assertEqual(list(frame.index), [1, 2])

    def test_asset_sets_differ(self):
        with self.assertRaisesRegex(ValueError, "identical assets"):
            event_study.compare_models(
                {"A": _abnormal("A", [0.0])}, {"B": _abnormal("B", [0.0])}
            )
