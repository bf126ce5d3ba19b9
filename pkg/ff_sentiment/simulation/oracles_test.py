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

from ff_sentiment import simulation
from ff_sentiment import testing


class BruteForceOlsTest(testing.TestCase):
    def test_matches_least_squares(self):
        rng = np.random.default_rng(0)
        x = np.column_stack([np.ones(15), rng.normal(size=(15, 2))])
        y = rng.normal(size=15)
        expected = np.linalg.lstsq(x, y, rcond=None)[0]
        self.assertAllClose(
            simulation.brute_force_ols(x, y), expected, rtol=0, atol=1e-12
        )

    def test_singular_system(self):
        x = np.column_stack([np.ones(5), np.ones(5)])
        with self.assertRaisesRegex(ValueError, "singular"):
            simulation.brute_force_ols(x, np.arange(5.0))


class BruteForceHacTest(testing.TestCase):
    def test_zero_lags_is_white_sandwich(self):
        rng = np.random.default_rng(1)
        x = np.column_stack([np.ones(10), rng.normal(size=10)])
        e = rng.normal(size=10)
        bread = np.linalg.inv(x.T @ x)
        expected = bread @ (x.T * e**2) @ x @ bread
        self.assertAllClose(
            simulation.brute_force_hac(x, e, 0), expected, rtol=0, atol=1e-12
        )

    def test_lags_out_of_range(self):
        with self.assertRaisesRegex(ValueError, "lags"):
            simulation.brute_force_hac(np.ones((3, 1)), np.ones(3), 3)
