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
"""
columns.py contains the column layout of every input file and of the merged panel.
"""


class FACTORS:
    """FACTORS contains column names for the daily factor table.

    The factor table defines the trading calendar of a merged panel.  Its columns
    are:

    - DATE: trading day, ISO-8601
    - MKT_RF: market excess return
    - SMB: size factor
    - HML: value factor
    - RMW: profitability factor
    - CMA: investment factor
    - RF: daily risk-free rate
    """

    DATE = "date"
    MKT_RF = "mkt_rf"
    SMB = "smb"
    HML = "hml"
    RMW = "rmw"
    CMA = "cma"
    RF = "rf"
    VALUES = (MKT_RF, SMB, HML, RMW, CMA, RF)
    HEADER = (DATE,) + VALUES


class YIELDS:
    """YIELDS contains column names for the 10-year Treasury yield series.

    - DATE: observation day
    - DGS10_YIELD: yield level in percent
    - DGS10_DIFF: change versus the previous observation, in percentage points
    """

    DATE = "date"
    DGS10_YIELD = "dgs10_yield"
    DGS10_DIFF = "dgs10_diff"
    HEADER = (DATE, DGS10_YIELD)


class VIX:
    """VIX contains column names for the VIX close series."""

    DATE = "date"
    VIX_CLOSE = "vix_close"
    HEADER = (DATE, VIX_CLOSE)


class RETURNS:
    """RETURNS contains column names for the asset return file.

    The long layout carries `ASSET`, `DATE`, `RETURN`; the wide layout carries
    `DATE` followed by one column per ticker.
    """

    ASSET = "asset"
    DATE = "date"
    RETURN = "return"
    LONG_HEADER = (ASSET, DATE, RETURN)


class ITEMS:
    """ITEMS contains column names for the scored sentiment item file.

    `TEXT` is optional; when the probability columns are blank the fallback
    lexicon scorer fills them from the text.
    """

    DATE = "date"
    SOURCE = "source"
    P_POS = "p_pos"
    P_NEU = "p_neu"
    P_NEG = "p_neg"
    TEXT = "text"
    HEADER = (DATE, SOURCE, P_POS, P_NEU, P_NEG)


class PANEL:
    """PANEL contains column names of a merged daily panel.

    - S_T: daily sentiment index
    - N_ITEMS: number of items behind S_T
    - HV_T: rolling sentiment volatility
    - S_T_X_HV_T: elementwise product of S_T and HV_T, formed on demand
    """

    DATE = FACTORS.DATE
    MKT_RF = FACTORS.MKT_RF
    SMB = FACTORS.SMB
    HML = FACTORS.HML
    RMW = FACTORS.RMW
    CMA = FACTORS.CMA
    RF = FACTORS.RF
    DGS10_DIFF = YIELDS.DGS10_DIFF
    S_T = "s_t"
    N_ITEMS = "n_items"
    HV_T = "hv_t"
    S_T_X_HV_T = "s_t_x_hv_t"
    VIX_CLOSE = VIX.VIX_CLOSE
