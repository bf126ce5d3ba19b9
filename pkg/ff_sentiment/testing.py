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
"""Shared base class for ff_sentiment tests.

Adds array assertions on numpy arrays and pandas objects to absl's
parameterized test case.
"""

import numpy as np
from absl.testing import parameterized


class TestCase(parameterized.TestCase):
    def assertAllClose(self, a, b, rtol=1e-6, atol=1e-6, msg=None):
        np.testing.assert_allclose(
            np.asarray(a, dtype=float),
            np.asarray(b, dtype=float),
            rtol=rtol,
            atol=atol,
            err_msg=msg or "",
        )

    def assertNotAllClose(self, a, b, rtol=1e-6, atol=1e-6, msg=None):
        if np.allclose(np.asarray(a), np.asarray(b), rtol=rtol, atol=atol):
            self.fail(msg or f"Expected {a} to differ from {b}.")

    def assertAllEqual(self, a, b, msg=None):
        np.testing.assert_array_equal(np.asarray(a), np.asarray(b), err_msg=msg or "")

    def assertAllInRange(self, a, lower, upper, msg=None):
        a = np.asarray(a, dtype=float)
        if a.size and (np.nanmin(a) < lower or np.nanmax(a) > upper):
            self.fail(
                msg
                or f"Values outside [{lower}, {upper}]: "
                f"min={np.nanmin(a)}, max={np.nanmax(a)}"
            )
