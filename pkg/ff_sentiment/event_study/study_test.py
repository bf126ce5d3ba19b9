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

from ff_sentiment import econometrics
from ff_sentiment import event_study
from ff_sentiment import simulation
from ff_sentiment import testing


def _panel(noise_stddev=0.005, assets=("A", "B", "C", "D"), shocks=()):
    config = simulation.SimulationConfig(
        n_days=200,
        assets=assets,
        noise_stddev=noise_stddev,
        beta_dispersion=0.1,
        event_shocks=shocks,
        seed=12,
    )
    panel, _ = simulation.generate_panel(config)
    return panel


class RunEventStudyTest(testing.TestCase):
    def test_result_layout(self):
        panel = _panel()
        config = event_study.EventWindowConfig(panel.dates[150])
        result = event_study.run_event_study(panel, config)
        self.assertEqual(list(result.models), ["baseline", "augmented"])
        self.assertEqual(result.event_day, panel.dates[150])
        export = result.to_export()
        self.assertEqual(export.index.name, "event_time")
        self.assertLen(export, 21)
        self.assertEqual(
            list(export.columns[:6]),
            [
                "mean_car_baseline",
                "bmp_z_baseline",
                "bmp_p_baseline",
                "mean_car_augmented",
                "bmp_z_augmented",
                "bmp_p_augmented",
            ],
        )
        self.assertIn("p_one_sided", export.columns)
        detail = result.asset_detail()
        self.assertLen(detail, 2 * 4 * 21)
        self.assertEqual(
            list(detail.columns),
            ["model", "asset", "event_time", "date", "ar", "car", "forecast_variance"],
        )

    def test_car_is_running_sum_of_ar(self):
        panel = _panel()
        config = event_study.EventWindowConfig(panel.dates[150])
        model = event_study.run_event_study(panel, config).models["baseline"]
        abnormal = model.abnormal["B"]
        self.assertAllClose(
            model.cars["B"].to_numpy(), np.cumsum(abnormal.values), rtol=0, atol=1e-15
        )
        self.assertEqual(model.cars["B"].iloc[0], abnormal.values[0])

    def test_zero_noise_cars_vanish(self):
        panel = _panel(noise_stddev=0.0)
        config = event_study.EventWindowConfig(panel.dates[150])
        result = event_study.run_event_study(panel, config)
        for model in result.models.values():
            self.assertLess(np.max(np.abs(model.cars.to_numpy())), 1e-12)

    def test_common_shock_is_significant(self):
        shock = simulation.EventShock(day=150, magnitude=0.03)
        panel = _panel(shocks=(shock,))
        config = event_study.EventWindowConfig(panel.dates[150])
        result = event_study.run_event_study(panel, config, start=0)
        bmp = result.models["augmented"].bmp
        self.assertEqual(list(bmp.index), list(range(0, 11)))
        self.assertLess(bmp.loc[0, "bmp_p"], 0.01)
        self.assertAllClose(
            result.models["augmented"].mean_car.loc[0], 0.03, rtol=0, atol=0.01
        )

    def test_single_asset_skips_cross_sectional_test(self):
        panel = _panel(assets=("A",))
        config = event_study.EventWindowConfig(panel.dates[150])
        result = event_study.run_event_study(panel, config)
        self.assertTrue(result.models["baseline"].bmp["bmp_z"].isna().all())

    def test_custom_specs_skip_comparison(self):
        panel = _panel()
        config = event_study.EventWindowConfig(panel.dates[150])
        result = event_study.run_event_study(
            panel, config, specs=(econometrics.RegressionSpec.interaction(),)
        )
        self.assertEqual(list(result.models), ["interaction"])
        self.assertIsNone(result.comparison)

    def test_start_outside_window(self):
        panel = _panel()
        config = event_study.EventWindowConfig(panel.dates[150])
        with self.assertRaisesRegex(ValueError, "start"):
            event_study.run_event_study(panel, config, start=11)
