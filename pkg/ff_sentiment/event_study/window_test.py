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
import pandas as pd
from absl.testing import parameterized

from ff_sentiment import event_study
from ff_sentiment import testing


class EventWindowConfigTest(testing.TestCase):
    def test_defaults(self):
        config = event_study.EventWindowConfig("2022-06-15")
        self.assertEqual(config.estimation_length, 120)
        self.assertEqual((config.t1, config.t2), (-10, 10))
        self.assertLen(config.event_times, 21)
        self.assertEqual(config.estimation_offset, -10)

    def test_positive_t1_estimation_ends_before_event(self):
        config = event_study.EventWindowConfig("2022-06-15", t1=0, t2=5)
        self.assertEqual(config.estimation_offset, 0)

    @parameterized.named_parameters(
        ("t1_after_event", {"t1": 1}),
        ("t2_before_event", {"t2": -1}),
        ("estimation", {"estimation_length": 1}),
    )
    def test_invalid(self, kwargs):
        with self.assertRaises(ValueError):
            event_study.EventWindowConfig("2022-06-15", **kwargs)

    def test_config_round_trip(self):
        config = event_study.EventWindowConfig("2022-06-15", 60, -5, 3)
        restored = event_study.EventWindowConfig.from_config(config.get_config())
        self.assertEqual(restored, config)
        self.assertEqual(config.get_config()["event_date"], "2022-06-15")


class LocateEventTest(testing.TestCase):
    dates = pd.bdate_range("2022-06-13", periods=10)

    def test_trading_day(self):
        self.assertEqual(event_study.locate_event(self.dates, "2022-06-15"), 2)

    def test_weekend_moves_to_monday(self):
        self.assertEqual(event_study.locate_event(self.dates, "2022-06-18"), 5)

    def test_after_calendar(self):
        with self.assertRaisesRegex(ValueError, "after the last trading day"):
            event_study.locate_event(self.dates, "2022-07-30")
