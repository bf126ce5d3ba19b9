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
"""Excess returns and the date-aligned merge of every input series."""

import dataclasses

import numpy as np
import pandas as pd
from absl import logging

from ff_sentiment.panel.columns import FACTORS
from ff_sentiment.panel.columns import PANEL

EQUAL_WEIGHT = "EW"


def compute_excess_return(returns, rf):
    """Subtracts the risk-free rate from every asset's return.

    Args:
        returns: a DataFrame of decimal returns indexed by date, one column per
            asset, or a single Series.
        rf: a Series of daily risk-free rates indexed by date.

    Returns:
        a tuple `(excess, omitted)` where `excess` has the same columns as
        `returns` restricted to dates present on both sides, and `omitted` counts
        dates present on only one side.
    """
    if isinstance(returns, pd.Series):
        returns = returns.to_frame()
    common = returns.index.intersection(rf.index)
    if len(common) == 0:
        raise ValueError(
            "Cannot compute excess returns over an empty intersection of dates. "
            f"Got returns over {len(returns)} dates and rf over {len(rf)} dates"
        )
    omitted = len(returns.index.union(rf.index)) - len(common)
    if omitted:
        logging.info("Excess returns: omitted %d unmatched dates", omitted)
    excess = returns.loc[common].sub(rf.loc[common], axis=0)
    return excess.sort_index(), omitted


def equal_weight_basket(returns):
    """Returns the equally weighted mean across the assets trading each day."""
    basket = returns.mean(axis=1, skipna=True)
    basket.name = EQUAL_WEIGHT
    return basket.dropna()


@dataclasses.dataclass(frozen=True)
class MergedPanel:
    """A date-indexed panel of regressors and per-asset excess returns.

    Attributes:
        frame: DataFrame indexed by date carrying the factor, yield, sentiment
            and (optionally) VIX columns named in `PANEL`.
        excess_returns: DataFrame on the same index with one column per asset.
        rows_in_calendar: number of factor-table dates the merge started from.
        rows_absent: calendar dates absent from at least one other series.
        rows_dropped: remaining dates dropped for a missing required value.
    """

    frame: pd.DataFrame
    excess_returns: pd.DataFrame
    rows_in_calendar: int = 0
    rows_absent: int = 0
    rows_dropped: int = 0

    def __len__(self):
        return len(self.frame)

    @property
    def dates(self):
        return self.frame.index

    @property
    def assets(self):
        return tuple(self.excess_returns.columns)

    def has_column(self, name):
        if name == PANEL.S_T_X_HV_T:
            return PANEL.S_T in self.frame and PANEL.HV_T in self.frame
        return name in self.frame

    def column(self, name):
        """Returns the regressor `name` as a float64 array.

        The interaction `s_t_x_hv_t` is formed on demand as the raw elementwise
        product of `s_t` and `hv_t`.
        """
        if name == PANEL.S_T_X_HV_T:
            return self.column(PANEL.S_T) * self.column(PANEL.HV_T)
        if name not in self.frame:
            raise KeyError(
                f"Panel has no column `{name}`. Available: {list(self.frame.columns)}"
            )
        return self.frame[name].to_numpy(dtype=np.float64)

    def excess_return(self, asset):
        if asset not in self.excess_returns:
            raise KeyError(f"Panel has no asset {asset!r}. Available: {self.assets}")
        return self.excess_returns[asset].to_numpy(dtype=np.float64)

    def take(self, rows):
        """Returns the panel restricted to positional `rows` (slice or array)."""
        return dataclasses.replace(
            self,
            frame=self.frame.iloc[rows],
            excess_returns=self.excess_returns.iloc[rows],
        )

    def with_columns(self, **columns):
        """Returns a panel with extra regressor columns, dropping incomplete rows.

        Used to attach derived regressors such as lagged sentiment shocks.
        """
        frame = self.frame.assign(**columns)
        complete = frame[list(columns)].notna().all(axis=1).to_numpy()
        return dataclasses.replace(
            self,
            frame=frame.loc[complete],
            excess_returns=self.excess_returns.loc[complete],
            rows_dropped=self.rows_dropped + int((~complete).sum()),
        )


def merge_panel(
    factors,
    yields,
    daily_sentiment,
    vix=None,
    excess_returns=None,
    required=None,
):
    """Aligns every series on the factor table's trading calendar.

    Dates missing from any other series are counted as absent; rows where a
    required field is missing (for instance the first yield difference or the
    warm-up period of `hv_t`) are counted as dropped.  Missing data is never
    imputed.

    Args:
        factors: factor DataFrame from `load_factor_table`.
        yields: yield DataFrame from `load_yield_series`.
        daily_sentiment: DataFrame indexed by date with `s_t`, optionally
            `n_items` and `hv_t`.
        vix: optional VIX Series.
        excess_returns: DataFrame (or Series) of excess returns per asset.
        required: panel columns that must be present on a retained row.
            Defaults to every column carried by the inputs.  Asset returns are
            always required.

    Returns:
        a `MergedPanel`.
    """
    if excess_returns is None:
        raise ValueError("`excess_returns` is required to build a panel.")
    if isinstance(excess_returns, pd.Series):
        excess_returns = excess_returns.to_frame()
    calendar = factors.index
    pieces = [
        factors[list(FACTORS.VALUES)],
        yields[[PANEL.DGS10_DIFF]],
        daily_sentiment[
            [
                c
                for c in (PANEL.S_T, PANEL.N_ITEMS, PANEL.HV_T)
                if c in daily_sentiment
            ]
        ],
    ]
    if vix is not None:
        pieces.append(vix.rename(PANEL.VIX_CLOSE).to_frame())

    present = np.ones(len(calendar), dtype=bool)
    for series in pieces[1:] + [excess_returns]:
        present &= calendar.isin(series.index)
    rows_absent = int((~present).sum())

    frame = pd.concat(
        [pieces[0]] + [p.reindex(calendar) for p in pieces[1:]], axis=1
    ).loc[present]
    returns = excess_returns.reindex(calendar).loc[present]

    if required is None:
        required = [c for c in frame.columns if c != PANEL.N_ITEMS]
    required = [c for c in required if c != PANEL.S_T_X_HV_T]
    missing = [c for c in required if c not in frame]
    if missing:
        raise ValueError(f"Required panel columns are not provided. Got {missing}")
    complete = frame[required].notna().all(axis=1) & returns.notna().all(axis=1)
    rows_dropped = int((~complete).sum())
    frame = frame.loc[complete]
    returns = returns.loc[complete]
    if len(frame) == 0:
        raise ValueError(
            "Merging produced a resulting panel empty of rows: "
            f"{len(calendar)} calendar dates, {rows_absent} absent, "
            f"{rows_dropped} dropped for missing values"
        )
    logging.info(
        "Merged panel: %d rows (%d calendar dates, %d absent, %d dropped)",
        len(frame),
        len(calendar),
        rows_absent,
        rows_dropped,
    )
    return MergedPanel(
        frame=frame,
        excess_returns=returns,
        rows_in_calendar=len(calendar),
        rows_absent=rows_absent,
        rows_dropped=rows_dropped,
    )
