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

import numpy as np
import pandas as pd

from ff_sentiment import panel as panel_lib
from ff_sentiment import sentiment
from ff_sentiment import simulation
from ff_sentiment import testing
from ff_sentiment.utils import table_io


def _reload(paths, hv_window):
    factors = panel_lib.load_factor_table(paths["factors"])
    yields = panel_lib.load_yield_series(paths["yields"])
    returns = panel_lib.load_returns(paths["returns"])
    items = sentiment.load_items(paths["sentiment"])
    index = sentiment.build_sentiment_index(
        items, calendar=factors.index, window=hv_window
    )
    excess, _ = panel_lib.compute_excess_return(returns, factors["rf"])
    return panel_lib.merge_panel(
        factors,
        yields,
        index,
        vix=panel_lib.load_vix_series(paths["vix"]),
        excess_returns=excess,
    )


class WritePanelFilesTest(testing.TestCase):
    def test_reloaded_panel_matches_simulation(self):
        config = simulation.SimulationConfig(
            n_days=40, assets=("A", "B"), hv_window=5, seed=2
        )
        synthetic = simulation.generate_panel(config)
        directory = self.create_tempdir().full_path
        paths = simulation.write_panel_files(synthetic, directory, header="test")
        reloaded = _reload(paths, hv_window=5)

        self.assertLen(reloaded, 40)
        self.assertEqual(reloaded.rows_dropped, 4)
        self.assertTrue(reloaded.dates.equals(synthetic.panel.dates))
        self.assertEqual(reloaded.assets, ("A", "B"))
        for column in ("mkt_rf", "smb", "rf", "dgs10_diff", "vix_close"):
            self.assertAllClose(
                reloaded.column(column),
                synthetic.panel.column(column),
                rtol=0,
                atol=1e-12,
            )
        for column in ("s_t", "hv_t"):
            self.assertAllEqual(
                reloaded.column(column), synthetic.panel.column(column)
            )
        self.assertAllClose(
            reloaded.excess_returns.to_numpy(),
            synthetic.panel.excess_returns.to_numpy(),
            rtol=0,
            atol=1e-12,
        )

    def test_files_carry_header_and_layouts(self):
        synthetic = simulation.generate_panel(simulation.SimulationConfig(n_days=30))
        directory = self.create_tempdir().full_path
        paths = simulation.write_panel_files(synthetic, directory, header="seed=0")
        with open(paths["factors"]) as stream:
            self.assertEqual(stream.readline(), "# seed=0\n")
            self.assertEqual(stream.readline(), "date,mkt_rf,smb,hml,rmw,cma,rf\n")
        items = table_io.read_table(paths["sentiment"])
        self.assertLen(items, 2 * 50)
        self.assertEqual(set(items["source"]), {"news:newswire", "social:stocktwits"})
        self.assertEqual(
            sorted(os.listdir(directory)),
            ["factors.csv", "returns.csv", "sentiment.csv", "vix.csv", "yields.csv"],
        )

    def test_yield_levels_stay_positive(self):
        config = simulation.SimulationConfig(
            n_days=300, dgs10_diff_process=(-0.05, 0.06), seed=1
        )
        synthetic = simulation.generate_panel(config)
        directory = self.create_tempdir().full_path
        paths = simulation.write_panel_files(synthetic, directory)
        levels = panel_lib.load_yield_series(paths["yields"])["dgs10_yield"]
        self.assertGreaterEqual(levels.min(), 1.0 - 1e-9)
        self.assertLen(levels, 321)


class WriteDemoTest(testing.TestCase):
    def test_demo_event_date(self):
        directory = self.create_tempdir().full_path
        paths, event_date = simulation.write_demo(directory)
        dates = pd.to_datetime(
            table_io.read_table(paths["factors"])["date"], format="%Y-%m-%d"
        )
        self.assertLen(dates, 724 + 20)
        self.assertEqual(event_date, dates.iloc[20 + 400].strftime("%Y-%m-%d"))
        self.assertTrue(np.all(np.diff(dates.to_numpy()) > np.timedelta64(0)))
