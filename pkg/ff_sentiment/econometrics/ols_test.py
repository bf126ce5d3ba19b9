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
from absl.testing import parameterized
from scipy import stats

from ff_sentiment import econometrics
from ff_sentiment import testing
from ff_sentiment.simulation import oracles


def _design(x, y, labels=None, intercept=True):
    x = np.asarray(x, dtype=float)
    if x.ndim == 1:
        x = x[:, None]
    labels = labels or tuple(f"x{i}" for i in range(x.shape[1]))
    if intercept:
        x = np.column_stack([np.ones(len(x)), x])
        labels = ("const",) + tuple(labels)
    return econometrics.DesignMatrix(None, x, labels, np.asarray(y, dtype=float))


def _random_design(n=200, k=5, seed=0, noise=0.1):
    rng = np.random.default_rng(seed)
    x = rng.normal(size=(n, k))
    beta = rng.normal(size=k + 1)
    y = beta[0] + x @ beta[1:] + noise * rng.normal(size=n)
    return _design(x, y), beta


class OlsFitTest(testing.TestCase):
    def test_perfect_fit(self):
        x = np.arange(1.0, 11.0)
        fit = econometrics.ols_fit(_design(x, 2.0 * x))
        self.assertAllClose(fit.params, [0.0, 2.0], atol=1e-12)
        self.assertAllClose(fit.rsquared, 1.0, atol=1e-12)

    def test_constant_response(self):
        rng = np.random.default_rng(1)
        fit = econometrics.ols_fit(_design(rng.normal(size=(20, 2)), np.full(20, 0.3)))
        self.assertAllClose(fit.params, [0.3, 0.0, 0.0], atol=1e-12)
        self.assertEqual(fit.rsquared, 0.0)

    @parameterized.named_parameters(
        ("small", 20, 2, 0), ("medium", 200, 5, 1), ("panel_sized", 724, 6, 2)
    )
    def test_matches_normal_equations_oracle(self, n, k, seed):
        design, _ = _random_design(n, k, seed)
        fit = econometrics.ols_fit(design)
        self.assertAllClose(
            fit.params,
            oracles.brute_force_ols(design.x, design.y),
            rtol=1e-10,
            atol=1e-12,
        )

    def test_residuals_orthogonal_to_regressors(self):
        design, _ = _random_design(500, 6, 3)
        fit = econometrics.ols_fit(design)
        bound = 1e-8 * design.n * np.abs(design.x).max() * np.abs(design.y).max()
        self.assertLessEqual(np.abs(design.x.T @ fit.residuals).max(), bound)

    def test_fit_statistics(self):
        design, _ = _random_design(100, 3, 4, noise=1.0)
        fit = econometrics.ols_fit(design)
        self.assertAllInRange(fit.rsquared, 0.0, 1.0)
        self.assertLessEqual(fit.rsquared_adj, fit.rsquared)
        expected_f = (fit.rsquared / 3) / ((1 - fit.rsquared) / (100 - 4))
        self.assertAllClose(fit.fvalue, expected_f, rtol=1e-10)
        self.assertEqual(fit.df_resid, 96)

    def test_classical_covariance(self):
        design, _ = _random_design(80, 2, 5)
        fit = econometrics.ols_fit(design)
        s2 = fit.residuals @ fit.residuals / (80 - 3)
        expected = s2 * np.linalg.inv(design.x.T @ design.x)
        self.assertAllClose(fit.cov, expected, rtol=1e-9, atol=1e-14)
        self.assertEqual(fit.cov_type, "classical")

    def test_covariance_is_positive_semidefinite(self):
        design, _ = _random_design(120, 4, 6)
        fit = econometrics.inference(econometrics.ols_fit(design), "nw", lags=5)
        self.assertAllClose(fit.cov, fit.cov.T, rtol=0, atol=0)
        eigenvalues = np.linalg.eigvalsh(fit.cov)
        self.assertGreaterEqual(eigenvalues.min(), -1e-10 * np.trace(fit.cov))

    def test_rank_deficiency_names_dependent_column(self):
        rng = np.random.default_rng(7)
        a = rng.normal(size=30)
        b = rng.normal(size=30)
        design = _design(np.column_stack([a, b, a + b]), rng.normal(size=30))
        with self.assertRaisesRegex(econometrics.RankDeficientError, "`x2`"):
            econometrics.ols_fit(design)

    def test_adding_regressor_never_lowers_rsquared(self):
        rng = np.random.default_rng(8)
        x = rng.normal(size=(200, 4))
        y = x @ [0.5, 0.2, 0.0, 0.0] + rng.normal(size=200)
        previous = -np.inf
        for k in range(1, 5):
            rsquared = econometrics.ols_fit(_design(x[:, :k], y)).rsquared
            self.assertGreaterEqual(rsquared, previous)
            previous = rsquared

    def test_projection_idempotence(self):
        design, _ = _random_design(150, 4, 9)
        fit = econometrics.ols_fit(design)
        fitted = design.x @ fit.params
        refit = econometrics.ols_fit(
            econometrics.DesignMatrix(None, design.x, design.labels, fitted)
        )
        self.assertAllClose(refit.params, fit.params, rtol=1e-10, atol=1e-12)

    def test_scale_equivariance(self):
        design, _ = _random_design(150, 3, 10)
        fit = econometrics.inference(econometrics.ols_fit(design), "nw")
        scaled = design.with_column("x1", 4.0 * design.column("x1"))
        scaled_fit = econometrics.inference(econometrics.ols_fit(scaled), "nw")
        self.assertAllClose(scaled_fit.params[2], fit.params[2] / 4.0, rtol=1e-10)
        self.assertAllClose(scaled_fit.tvalues, fit.tvalues, rtol=1e-8)

    def test_does_not_mutate_inputs(self):
        design, _ = _random_design(50, 2, 11)
        x_before = design.x.copy()
        y_before = design.y.copy()
        econometrics.ols_fit(design)
        self.assertAllEqual(design.x, x_before)
        self.assertAllEqual(design.y, y_before)

    def test_repeat_fits_bit_identical(self):
        design, _ = _random_design(300, 6, 12)
        first = econometrics.ols_fit(design)
        second = econometrics.ols_fit(design)
        self.assertAllEqual(first.params, second.params)
        self.assertAllEqual(first.cov, second.cov)

    def test_conf_int_and_predict(self):
        design, _ = _random_design(60, 2, 13)
        fit = econometrics.ols_fit(design)
        bounds = fit.conf_int(0.05)
        self.assertAllClose((bounds[:, 0] + bounds[:, 1]) / 2, fit.params)
        self.assertAllClose(fit.predict(design.x), design.y - fit.residuals)
        summary = fit.to_dict()
        self.assertEqual(summary["labels"], ["const", "x0", "x1"])
        self.assertEqual(summary["nobs"], 60)


class InferenceTest(testing.TestCase):
    def test_zero_coefficient(self):
        params = np.array([0.0, 1.0])
        cov = np.diag([0.04, 0.25])
        bse, tvalues, pvalues, degenerate = econometrics.ols.coefficient_tests(
            params, cov, 50
        )
        self.assertEqual(tvalues[0], 0.0)
        self.assertEqual(pvalues[0], 1.0)
        self.assertAllClose(bse, [0.2, 0.5])
        self.assertFalse(degenerate.any())

    def test_zero_standard_error_with_nonzero_coefficient(self):
        params = np.array([0.0, 1.0])
        _, tvalues, pvalues, degenerate = econometrics.ols.coefficient_tests(
            params, np.zeros((2, 2)), 50
        )
        self.assertAllEqual(pvalues, [1.0, 0.0])
        self.assertAllEqual(degenerate, [False, True])
        self.assertEqual(tvalues[1], np.inf)

    def test_t_quantile(self):
        params = np.array([1.984])
        _, _, pvalues, _ = econometrics.ols.coefficient_tests(
            params, np.eye(1), 100
        )
        self.assertAllClose(pvalues[0], 0.05, atol=1e-3)
        self.assertAllClose(pvalues[0], 2 * stats.t.sf(1.984, 100), rtol=1e-12)

    def test_zero_noise_fit_is_significant(self):
        rng = np.random.default_rng(14)
        x = rng.normal(size=(100, 2))
        fit = econometrics.inference(
            econometrics.ols_fit(_design(x, 0.01 + x @ [0.9, -0.3])), "nw"
        )
        self.assertTrue(
            all(econometrics.significance_stars(p) == "***" for p in fit.pvalues)
        )

    @parameterized.named_parameters(
        ("classical", "classical", "classical"),
        ("hc0", "hc0", "hc0"),
        ("newey_west", "nw", "nw(5)"),
    )
    def test_cov_label(self, choice, label):
        design, _ = _random_design(80, 2, 15)
        fit = econometrics.inference(econometrics.ols_fit(design), choice)
        self.assertEqual(fit.cov_type, label)

    def test_inference_keeps_coefficients(self):
        design, _ = _random_design(80, 2, 16)
        fit = econometrics.ols_fit(design)
        robust = econometrics.inference(fit, "nw", lags=3)
        self.assertAllEqual(robust.params, fit.params)
        self.assertEqual(robust.fvalue, fit.fvalue)
        self.assertNotAllClose(robust.bse, fit.bse)

    def test_unknown_cov_choice(self):
        design, _ = _random_design(80, 2, 17)
        with self.assertRaisesRegex(ValueError, "cov_type"):
            econometrics.inference(econometrics.ols_fit(design), "hac")


class SignificanceStarsTest(testing.TestCase):
    @parameterized.named_parameters(
        ("one_percent", 0.001, "***"),
        ("five_percent", 0.02, "**"),
        ("ten_percent", 0.07, "*"),
        ("insignificant", 0.5, ""),
        ("boundary", 0.01, "**"),
        ("missing", float("nan"), ""),
    )
    def test_stars(self, p, expected):
        self.assertEqual(econometrics.significance_stars(p), expected)
