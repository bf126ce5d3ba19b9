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
import statsmodels.api as sm
from absl.testing import parameterized

from ff_sentiment import econometrics
from ff_sentiment import testing
from ff_sentiment.simulation import oracles


def _instance(n, k, seed):
    rng = np.random.default_rng(seed)
    x = np.column_stack([np.ones(n), rng.normal(size=(n, k - 1))])
    residuals = rng.normal(size=n) * (1 + np.abs(x[:, -1]))
    return x, residuals


def _assert_matrix_close(test, actual, expected, rtol):
    test.assertAllClose(
        actual, expected, rtol=rtol, atol=rtol * np.abs(expected).max()
    )


class NeweyWestCovTest(testing.TestCase):
    def test_zero_lags_is_hc0(self):
        x, residuals = _instance(50, 3, 0)
        nw = econometrics.newey_west_cov(x, residuals, lags=0)
        self.assertAllEqual(nw, econometrics.hc0_cov(x, residuals))
        bread = np.linalg.inv(x.T @ x)
        white = bread @ (x.T * residuals**2) @ x @ bread
        _assert_matrix_close(self, nw, white, 1e-12)

    def test_small_instance_matches_oracle(self):
        x, residuals = _instance(12, 2, 1)
        _assert_matrix_close(
            self,
            econometrics.newey_west_cov(x, residuals, lags=3),
            oracles.brute_force_hac(x, residuals, 3),
            1e-12,
        )

    @parameterized.named_parameters(
        ("lags_0", 0), ("lags_1", 1), ("lags_5", 5), ("lags_10", 10)
    )
    def test_matches_oracle(self, lags):
        x, residuals = _instance(150, 4, lags + 2)
        _assert_matrix_close(
            self,
            econometrics.newey_west_cov(x, residuals, lags=lags),
            oracles.brute_force_hac(x, residuals, lags),
            1e-12,
        )

    @parameterized.named_parameters(("lags_0", 0), ("lags_5", 5))
    def test_matches_statsmodels(self, lags):
        rng = np.random.default_rng(20 + lags)
        x = sm.add_constant(rng.normal(size=(300, 3)))
        y = x @ [0.1, 0.5, -0.2, 0.0] + rng.normal(size=300)
        design = econometrics.DesignMatrix(None, x, ("const", "a", "b", "c"), y)
        fit = econometrics.inference(econometrics.ols_fit(design), "nw", lags=lags)
        reference = sm.OLS(y, x).fit(
            cov_type="HAC", cov_kwds={"maxlags": lags, "use_correction": False}
        )
        _assert_matrix_close(self, fit.cov, reference.cov_params(), 1e-9)

    def test_classical_matches_statsmodels(self):
        rng = np.random.default_rng(30)
        x = sm.add_constant(rng.normal(size=(200, 2)))
        y = x @ [0.3, 1.0, 0.0] + rng.normal(size=200)
        fit = econometrics.ols_fit(
            econometrics.DesignMatrix(None, x, ("const", "a", "b"), y)
        )
        reference = sm.OLS(y, x).fit()
        _assert_matrix_close(self, fit.cov, reference.cov_params(), 1e-9)
        self.assertAllClose(fit.rsquared, reference.rsquared, rtol=1e-10)
        self.assertAllClose(fit.rsquared_adj, reference.rsquared_adj, rtol=1e-10)
        self.assertAllClose(fit.fvalue, reference.fvalue, rtol=1e-8)

    def test_zero_residuals_give_zero_matrix(self):
        x, _ = _instance(20, 2, 3)
        self.assertAllEqual(
            econometrics.newey_west_cov(x, np.zeros(20), lags=2), np.zeros((2, 2))
        )
        self.assertAllEqual(
            oracles.brute_force_hac(x, np.zeros(20), 2), np.zeros((2, 2))
        )

    def test_symmetric(self):
        x, residuals = _instance(60, 4, 4)
        cov = econometrics.newey_west_cov(x, residuals, lags=5)
        self.assertAllEqual(cov, cov.T)

    def test_negative_lags(self):
        x, residuals = _instance(20, 2, 5)
        with self.assertRaisesRegex(ValueError, "non-negative"):
            econometrics.newey_west_cov(x, residuals, lags=-1)

    def test_lags_not_below_n(self):
        x, residuals = _instance(20, 2, 6)
        with self.assertRaisesRegex(ValueError, "smaller than the number of rows"):
            econometrics.newey_west_cov(x, residuals, lags=20)


class ClassicalCovTest(testing.TestCase):
    def test_scaled_inverse(self):
        xtx_inv = np.array([[2.0, 0.5], [0.5, 1.0]])
        self.assertAllEqual(
            econometrics.classical_cov(xtx_inv, 0.25), [[0.5, 0.125], [0.125, 0.25]]
        )
