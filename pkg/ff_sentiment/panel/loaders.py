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
"""Loaders for the delimited input files that feed a merged panel.

Every loader returns a pandas object indexed by a sorted, duplicate-free
`DatetimeIndex` named `date`.  Validation failures raise `SchemaError` carrying
the 1-based line number of the offending row (the header is line 1).
"""

import numpy as np
import pandas as pd
from absl import logging

from ff_sentiment.panel import units
from ff_sentiment.panel.columns import FACTORS
from ff_sentiment.panel.columns import RETURNS
from ff_sentiment.panel.columns import VIX
from ff_sentiment.panel.columns import YIELDS
from ff_sentiment.utils import table_io
from ff_sentiment.utils.table_io import SchemaError

# Daily factor returns above 50% are rejected as unit mistakes.
FACTOR_SANITY_BOUND = 0.5


def weekend_dates(index):
    """Returns the Saturday/Sunday dates of `index`."""
    index = pd.DatetimeIndex(index)
    return index[index.dayofweek >= 5]


def _flag_weekends(path, index):
    weekends = weekend_dates(index)
    if len(weekends):
        logging.warning(
            "%s: %d weekend dates, first %s", path, len(weekends), weekends[0].date()
        )


def load_factor_table(path, unit="percent"):
    """Loads the daily factor table `date,mkt_rf,smb,hml,rmw,cma,rf`.

    Args:
        path: path to the delimited factor file.
        unit: One of `"percent"`, `"fraction"`, the unit the file is written in.
            Defaults to `"percent"`, the convention of published factor files.

    Returns:
        a DataFrame indexed by date with the six factor columns as decimal
        fractions, sorted by date.

    Raises:
        SchemaError: on a header mismatch, empty file, malformed or non-finite
            value, a duplicate date or a factor exceeding the sanity bound.
    """
    unit = units.validate_unit(unit)
    raw = table_io.read_table(path)
    table_io.check_header(path, raw, FACTORS.HEADER)
    index = table_io.parse_dates(path, raw[FACTORS.DATE])
    data = {}
    for column in FACTORS.VALUES:
        values = units.convert_units(
            table_io.parse_numbers(path, raw, column), source=unit, target="fraction"
        )
        too_large = np.flatnonzero(np.abs(values) >= FACTOR_SANITY_BOUND)
        if too_large.size:
            position = too_large[0]
            raise SchemaError(
                path,
                f"`{column}` of {values[position]} exceeds the daily sanity bound "
                f"{FACTOR_SANITY_BOUND}; check `unit` (got unit={unit})",
                line=table_io.line_of(position),
            )
        data[column] = values
    factors = table_io.sorted_unique(path, pd.DataFrame(data, index=index))
    _flag_weekends(path, factors.index)
    logging.info("Loaded %d factor rows from %s", len(factors), path)
    return factors


def load_yield_series(path, unit="percent"):
    """Loads the 10-year yield file `date,dgs10_yield` and differences it.

    Blank or `.` yields (the FRED convention for holidays) are skipped before
    differencing, so the change is taken across observation gaps.  The first
    observation has no change and carries NaN.

    Args:
        path: path to the delimited yield file.
        unit: One of `"percent"`, `"fraction"`, the unit the file is written in.
            Yields are kept in percent internally.

    Returns:
        a DataFrame indexed by date with columns `dgs10_yield` (percent) and
        `dgs10_diff` (percentage points).
    """
    unit = units.validate_unit(unit)
    raw = table_io.read_table(path)
    table_io.check_header(path, raw, YIELDS.HEADER)
    index = table_io.parse_dates(path, raw[YIELDS.DATE])
    levels = units.convert_units(
        table_io.parse_numbers(path, raw, YIELDS.DGS10_YIELD, allow_missing=True),
        source=unit,
        target="percent",
    )
    negative = np.flatnonzero(levels < 0)
    if negative.size:
        position = negative[0]
        raise SchemaError(
            path,
            f"negative yield {levels[position]}",
            line=table_io.line_of(position),
        )
    frame = pd.DataFrame({YIELDS.DGS10_YIELD: levels}, index=index)
    skipped = int(frame[YIELDS.DGS10_YIELD].isna().sum())
    if skipped:
        logging.info("%s: skipped %d missing yield observations", path, skipped)
    frame = table_io.sorted_unique(path, frame.dropna())
    if len(frame) == 0:
        raise SchemaError(path, "no data rows")
    frame[YIELDS.DGS10_DIFF] = frame[YIELDS.DGS10_YIELD].diff()
    logging.info("Loaded %d yield rows from %s", len(frame), path)
    return frame


def load_vix_series(path):
    """Loads the VIX file `date,vix_close` as a Series indexed by date."""
    raw = table_io.read_table(path)
    table_io.check_header(path, raw, VIX.HEADER)
    index = table_io.parse_dates(path, raw[VIX.DATE])
    values = table_io.parse_numbers(path, raw, VIX.VIX_CLOSE)
    negative = np.flatnonzero(values < 0)
    if negative.size:
        raise SchemaError(
            path, "negative VIX close", line=table_io.line_of(negative[0])
        )
    frame = pd.DataFrame({VIX.VIX_CLOSE: values}, index=index)
    frame = table_io.sorted_unique(path, frame)
    logging.info("Loaded %d VIX rows from %s", len(frame), path)
    return frame[VIX.VIX_CLOSE]


def _check_returns(path, values, rows):
    bad = np.flatnonzero(~(values > -1.0))
    if bad.size:
        position = bad[0]
        raise SchemaError(
            path,
            f"return {values[position]} must be > -1",
            line=table_io.line_of(rows[position]),
        )


def load_returns(path, unit="fraction"):
    """Loads daily simple returns in long or wide layout.

    The layout is detected from the header: `asset,date,return` is long, a
    header starting with `date` followed by tickers is wide.  In the wide layout a
    blank cell means the asset has no return that day.

    Args:
        path: path to the delimited returns file.
        unit: One of `"percent"`, `"fraction"`.  Defaults to `"fraction"`.

    Returns:
        a DataFrame indexed by date with one column of decimal returns per asset,
        columns in first-seen order.
    """
    unit = units.validate_unit(unit)
    raw = table_io.read_table(path, lowercase=False)
    columns = tuple(c.lower() for c in raw.columns)
    if set(columns) == set(RETURNS.LONG_HEADER):
        raw.columns = list(columns)
        index = table_io.parse_dates(path, raw[RETURNS.DATE])
        values = units.convert_units(
            table_io.parse_numbers(path, raw, RETURNS.RETURN),
            source=unit,
            target="fraction",
        )
        _check_returns(path, values, np.arange(len(values)))
        long = pd.DataFrame(
            {
                RETURNS.ASSET: raw[RETURNS.ASSET].to_numpy(),
                RETURNS.DATE: index,
                RETURNS.RETURN: values,
            }
        )
        duplicated = long.duplicated([RETURNS.ASSET, RETURNS.DATE])
        if duplicated.any():
            position = int(np.flatnonzero(duplicated.to_numpy())[0])
            row = long.iloc[position]
            raise SchemaError(
                path,
                f"duplicate return for asset {row[RETURNS.ASSET]} on "
                f"{row[RETURNS.DATE].date().isoformat()}",
                line=table_io.line_of(position),
            )
        assets = list(pd.unique(long[RETURNS.ASSET]))
        wide = long.pivot(
            index=RETURNS.DATE, columns=RETURNS.ASSET, values=RETURNS.RETURN
        )
        wide = wide.reindex(columns=assets)
    elif columns and columns[0] == RETURNS.DATE and len(columns) > 1:
        # Tickers keep their original case in the wide layout.
        raw.columns = [RETURNS.DATE] + list(raw.columns[1:])
        index = table_io.parse_dates(path, raw[RETURNS.DATE])
        data = {}
        for asset in raw.columns[1:]:
            values = units.convert_units(
                table_io.parse_numbers(path, raw, asset, allow_missing=True),
                source=unit,
                target="fraction",
            )
            present = ~np.isnan(values)
            _check_returns(
                path, values[present], np.flatnonzero(present)
            )
            data[asset] = values
        wide = pd.DataFrame(data, index=index)
    else:
        raise SchemaError(
            path,
            "header should be `asset,date,return` or `date,<TICKER>...`. "
            f"Got {','.join(columns)}",
            line=1,
        )
    wide.index.name = "date"
    wide.columns.name = None
    wide = table_io.sorted_unique(path, wide)
    logging.info(
        "Loaded %d assets over %d dates from %s", wide.shape[1], len(wide), path
    )
    return wide
