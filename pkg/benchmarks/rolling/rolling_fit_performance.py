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
import pandas as pd
import seaborn as sns

from ff_sentiment import econometrics
from ff_sentiment import rolling
from ff_sentiment import simulation

panel, _ = simulation.generate_panel(simulation.SimulationConfig(n_days=724, seed=1))
spec = econometrics.RegressionSpec.interaction()

windows = [60, 90, 120]
worker_counts = [None, 2, 4, 8]

results = []
for window in windows:
    for num_workers in worker_counts:
        # warm up
        rolling.rolling_fit(panel, spec, "SYN", window=window, step=50)

        start = time.time()
        path = rolling.rolling_fit(
            panel, spec, "SYN", window=window, num_workers=num_workers
        )
        end = time.time()
        results.append(
            {
                "window": window,
                "num_workers": num_workers or 1,
                "n_windows": len(path),
                "runtime": end - start,
            }
        )
        print(f"Runtime for W={window}, num_workers={num_workers}: {end - start}")

data = pd.DataFrame(results)
print(data.to_string(index=False))

sns.lineplot(data=data, x="num_workers", y="runtime", hue="window")
plt.xlabel("Number of worker threads")
plt.ylabel("rolling_fit() runtime (seconds)")
plt.title("Runtime of a full rolling path over 724 days")
plt.show()
