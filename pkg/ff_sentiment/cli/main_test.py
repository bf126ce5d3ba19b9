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
import os

from absl import app
from absl import flags
from absl.testing import flagsaver

from ff_sentiment import simulation
from ff_sentiment import testing
from ff_sentiment.cli import main

FLAGS = flags.FLAGS


class MainTest(testing.TestCase):
    def setUp(self):
        super().setUp()
        FLAGS.mark_as_parsed()
        self.paths, self.event_date = simulation.write_demo(
            self.create_tempdir().full_path
        )
        self.out = self.create_tempdir().full_path

    def test_describe(self):
        with flagsaver.flagsaver(out=self.out, **self.paths):
            self.assertEqual(main.main(["ff-sentiment", "describe"]), 0)
        self.assertTrue(os.path.isfile(os.path.join(self.out, "describe.csv")))

    def test_flags_reach_config(self):
        with flagsaver.flagsaver(
            windows=["60", "90"], iv_lags=["1"], t1=-5, event_date="2021-06-01"
        ):
            config = main.config_from_flags("roll")
        self.assertEqual(config.windows, (60, 90))
        self.assertEqual(config.iv_lags, (1,))
        self.assertEqual(config.t1, -5)
        self.assertEqual(config.event_date, "2021-06-01")
        self.assertEqual(config.seed, 724)

    def test_missing_file_exits_with_error(self):
        paths = dict(self.paths, factors="/nonexistent/factors.csv")
        with flagsaver.flagsaver(out=self.out, **paths):
            self.assertEqual(main.main(["ff-sentiment", "regress"]), 1)

    def test_bad_parameter_exits_with_error(self):
        with flagsaver.flagsaver(out=self.out, nw_lags=-1, **self.paths):
            self.assertEqual(main.main(["ff-sentiment", "regress"]), 1)

    def test_usage_errors(self):
        with self.assertRaisesRegex(app.UsageError, "Unknown command"):
            main.main(["ff-sentiment", "plot"])
        with self.assertRaisesRegex(app.UsageError, "exactly one command"):
            main.main(["ff-sentiment"])
        with self.assertRaisesRegex(app.UsageError, "exactly one command"):
            main.main(["ff-sentiment", "describe", "regress"])
