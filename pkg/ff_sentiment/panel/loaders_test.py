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

from ff_sentiment import panel
from ff_sentiment import testing

FACTOR_HEADER = "date,mkt_rf,smb,hml,rmw,cma,rf\n"


class LoadFactorTableTest(testing.TestCase):
    def test_percent_converted_to_fraction(self):
        path = self.create_tempfile(
            content=FACTOR_HEADER + "2020-01-02, 0.85, -0.30, 0.12, 0.05, 0.02, 0.006\n"
        ).full_path
        factors = panel.load_factor_table(path, unit="percent")
        self.assertAllClose(factors["mkt_rf"], [0.0085], rtol=0, atol=1e-15)
        self.assertAllClose(factors["rf"], [0.00006], rtol=0, atol=1e-15)

    def test_rows_sorted_by_date(self):
        path = self.create_tempfile(
            content=FACTOR_HEADER
            + "2020-01-02,0.1,0,0,0,0,0\n"
            + "2020-01-06,0.3,0,0,0,0,0\n"
            + "2020-01-03,0.2,0,0,0,0,0\n"
        ).full_path
        factors = panel.load_factor_table(path)
        self.assertEqual(
            list(factors.index.strftime("%Y-%m-%d")),
            ["2020-01-02", "2020-01-03", "2020-01-06"],
        )
        self.assertAllClose(factors["mkt_rf"], [0.001, 0.002, 0.003])

    def test_empty_file(self):
        path = self.create_tempfile(content="").full_path
        with self.assertRaisesRegex(panel.SchemaError, "no data rows"):
            panel.load_factor_table(path)

    def test_header_only(self):
        path = self.create_tempfile(content=FACTOR_HEADER).full_path
        with self.assertRaisesRegex(panel.SchemaError, "no data rows"):
            panel.load_factor_table(path)

    def test_duplicate_date(self):
        path = self.create_tempfile(
            content=FACTOR_HEADER
            + "2020-01-02,0.1,0,0,0,0,0\n"
            + "2020-01-02,0.2,0,0,0,0,0\n"
        ).full_path
        with self.assertRaisesRegex(panel.SchemaError, "duplicate date 2020-01-02"):
            panel.load_factor_table(path)

    def test_malformed_row_reports_line(self):
        path = self.create_tempfile(
            content=FACTOR_HEADER
            + "2020-01-02,0.1,0,0,0,0,0\n"
            + "2020-01-03,abc,0,0,0,0,0\n"
        ).full_path
        with self.assertRaises(panel.SchemaError) as context:
            panel.load_factor_table(path)
        self.assertEqual(context.exception.line, 3)

    def test_non_finite_value(self):
        path = self.create_tempfile(
            content=FACTOR_HEADER + "2020-01-02,inf,0,0,0,0,0\n"
        ).full_path
        with self.assertRaisesRegex(panel.SchemaError, "non-finite"):
            panel.load_factor_table(path)

    def test_sanity_bound(self):
        path = self.create_tempfile(
            content=FACTOR_HEADER + "2020-01-02,0.85,0,0,0,0,0\n"
        ).full_path
        with self.assertRaisesRegex(panel.SchemaError, "sanity bound"):
            panel.load_factor_table(path, unit="fraction")

    def test_header_mismatch(self):
        path = self.create_tempfile(
            content="date,mkt,smb,hml,rmw,cma,rf\n2020-01-02,0,0,0,0,0,0\n"
        ).full_path
        with self.assertRaisesRegex(panel.SchemaError, "header should be"):
            panel.load_factor_table(path)


class LoadYieldSeriesTest(testing.TestCase):
    def _load(self, rows):
        content = "date,dgs10_yield\n" + "".join(f"{d},{v}\n" for d, v in rows)
        return panel.load_yield_series(self.create_tempfile(content=content).full_path)

    def test_first_difference(self):
        yields = self._load(
            [("2020-01-02", 1.50), ("2020-01-03", 1.53), ("2020-01-06", 1.48)]
        )
        diffs = yields["dgs10_diff"].to_numpy()
        self.assertTrue(pd.isna(diffs[0]))
        self.assertAllClose(diffs[1:], [0.03, -0.05], atol=1e-12)

    def test_single_row(self):
        yields = self._load([("2020-01-02", 1.5)])
        self.assertLen(yields, 1)
        self.assertTrue(pd.isna(yields["dgs10_diff"].iloc[0]))

    def test_constant_yields(self):
        yields = self._load(
            [("2020-01-02", 2.0), ("2020-01-03", 2.0), ("2020-01-06", 2.0)]
        )
        self.assertAllEqual(yields["dgs10_diff"].to_numpy()[1:], [0.0, 0.0])

    def test_missing_marker_skipped_before_differencing(self):
        yields = self._load(
            [("2020-01-02", 1.50), ("2020-01-03", "."), ("2020-01-06", 1.56)]
        )
        self.assertLen(yields, 2)
        self.assertAllClose(yields["dgs10_diff"].to_numpy()[1:], [0.06], atol=1e-12)

    def test_negative_yield(self):
        with self.assertRaisesRegex(panel.SchemaError, "negative yield"):
            self._load([("2020-01-02", -0.1)])

    def test_unparseable_date(self):
        with self.assertRaisesRegex(panel.SchemaError, "unparseable date"):
            self._load([("2020/13/45", 1.0)])


class LoadReturnsTest(testing.TestCase):
    def test_long_layout(self):
        path = self.create_tempfile(
            content="asset,date,return\n"
            "AAPL,2020-01-03,-0.02\n"
            "AAPL,2020-01-02,0.01\n"
        ).full_path
        returns = panel.load_returns(path)
        self.assertEqual(list(returns.columns), ["AAPL"])
        self.assertAllClose(returns["AAPL"], [0.01, -0.02])

    def test_long_layout_duplicate_names_asset_and_date(self):
        path = self.create_tempfile(
            content="asset,date,return\n"
            "AAPL,2020-01-02,0.01\n"
            "AAPL,2020-01-02,0.02\n"
        ).full_path
        with self.assertRaisesRegex(panel.SchemaError, "AAPL on 2020-01-02"):
            panel.load_returns(path)

    def test_wide_layout(self):
        rows = "".join(
            f"2020-01-{day:02d},0.01,0.02,-0.01\n" for day in (2, 3, 6, 7, 8)
        )
        path = self.create_tempfile(content="date,AAA,BBB,CCC\n" + rows).full_path
        returns = panel.load_returns(path)
        self.assertEqual(returns.shape, (5, 3))
        self.assertEqual(list(returns.columns), ["AAA", "BBB", "CCC"])

    def test_wide_layout_blank_cell_is_missing(self):
        path = self.create_tempfile(
            content="date,AAA,BBB\n2020-01-02,0.01,\n2020-01-03,0.02,0.03\n"
        ).full_path
        returns = panel.load_returns(path)
        self.assertTrue(pd.isna(returns["BBB"].iloc[0]))

    def test_total_loss_rejected(self):
        path = self.create_tempfile(
            content="asset,date,return\nAAPL,2020-01-02,-1.0\n"
        ).full_path
        with self.assertRaisesRegex(panel.SchemaError, "must be > -1"):
            panel.load_returns(path)


class LoadVixSeriesTest(testing.TestCase):
    def test_load(self):
        path = self.create_tempfile(
            content="date,vix_close\n2020-01-03,14.0\n2020-01-02,12.5\n"
        ).full_path
        vix = panel.load_vix_series(path)
        self.assertAllClose(vix, [12.5, 14.0])


class WeekendDatesTest(testing.TestCase):
    def test_weekend_dates(self):
        dates = pd.to_datetime(["2020-01-03", "2020-01-04", "2020-01-05", "2020-01-06"])
        weekends = panel.weekend_dates(dates)
        self.assertEqual(
            list(weekends.strftime("%Y-%m-%d")), ["2020-01-04", "2020-01-05"]
        )
