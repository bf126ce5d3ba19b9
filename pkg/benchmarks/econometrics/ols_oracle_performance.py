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
import time

import matplotlib.pyplot as plt
import numpy as np
import pandas as pd
import seaborn as sns

from ff_sentiment import econometrics
from ff_sentiment.simulation import oracles


def produce_random_design(n, k=8, seed=0):
    """Generates a well-conditioned design with an intercept and k - 1 factors."""
    rng = np.random.default_rng(seed)
    x = np.column_stack([np.ones(n), rng.normal(size=(n, k - 1))])
    y = x @ rng.normal(size=k) + rng.normal(size=n)
    labels = ("const",) + tuple(f"x{i}" for i in range(1, k))
    return econometrics.DesignMatrix(None, x, labels, y)


n_rows = [100, 250, 500, 750, 1000]

fit_runtimes = []
oracle_runtimes = []
max_relative_errors = []

for n in n_rows:
    design = produce_random_design(n)
    # warm up
    econometrics.ols_fit(design)

    start = time.time()
    fit = econometrics.inference(
        econometrics.ols_fit(design), econometrics.NEWEY_WEST, lags=5
    )
    fit_done = time.time()
    expected = oracles.brute_force_ols(design.x, design.y)
    oracles.brute_force_hac(design.x, fit.residuals, 5)
    end = time.time()

    fit_runtimes.append(fit_done - start)
    oracle_runtimes.append(end - fit_done)
    max_relative_errors.append(
        float(np.max(np.abs(fit.params - expected) / np.abs(expected)))
    )

    print("max_relative_errors", max_relative_errors)

data = pd.DataFrame(
    {
        "n_rows": n_rows,
        "fit_runtimes": fit_runtimes,
        "oracle_runtimes": oracle_runtimes,
        "max_relative_errors": max_relative_errors,
    }
)
print(data.to_string(index=False))

sns.lineplot(data=data, x="n_rows", y="fit_runtimes")
plt.xlabel("Number of rows")
plt.ylabel("ols_fit() + Newey-West runtime (seconds)")
plt.title("Runtime of the QR fit")
plt.show()

sns.lineplot(data=data, x="n_rows", y="oracle_runtimes")
plt.xlabel("Number of rows")
plt.ylabel("Reference loop runtime (seconds)")
plt.title("Runtime of the normal-equation and HAC reference loops")
plt.show()
