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
"""Human-readable tables and their machine-readable counterparts."""

import numpy as np
import pandas as pd

from ff_sentiment import econometrics
from ff_sentiment.econometrics.specs import INTERCEPT
from ff_sentiment.panel.columns import PANEL

DESCRIBE_COLUMNS = ("Mean", "Std. Dev.", "Min", "Max", "Observations")

# (row label, panel column, multiplier); `None` stands for the asset's return.
DESCRIBE_ROWS = (
    ("Excess Return", None, 100.0),
    ("Market-RF", PANEL.MKT_RF, 100.0),
    ("SMB", PANEL.SMB, 100.0),
    ("HML", PANEL.HML, 100.0),
    ("RMW", PANEL.RMW, 100.0),
    ("CMA", PANEL.CMA, 100.0),
    ("S_t", PANEL.S_T, 1.0),
    ("HV_t", PANEL.HV_T, 1.0),
    ("VIX", PANEL.VIX_CLOSE, 1.0),
    ("dDGS10", PANEL.DGS10_DIFF, 1.0),
)

TERM_NAMES = {
    PANEL.DGS10_DIFF: "dDGS10",
    PANEL.MKT_RF: "Market-RF",
    PANEL.SMB: "SMB",
    PANEL.HML: "HML",
    PANEL.RMW: "RMW",
    PANEL.CMA: "CMA",
    PANEL.S_T: "S_t",
    PANEL.HV_T: "HV_t",
    PANEL.S_T_X_HV_T: "S_t x HV_t",
    INTERCEPT: "Constant",
}
TERM_ORDER = tuple(TERM_NAMES)

MODEL_TITLES = {
    "baseline": "Baseline",
    "augmented": "Sentiment",
    "interaction": "Interaction",
    "iv": "IV (2SLS)",
}

STARS_NOTE = "*** p<0.01, ** p<0.05, * p<0.10"


def describe_table(panel, asset):
    """Mean, population standard deviation, extremes and count per variable.

    Returns and factors are shown in percent; rows whose column the panel
    lacks are left out.
    """
    rows = {}
    for label, column, multiplier in DESCRIBE_ROWS:
        if column is None:
            values = panel.excess_return(asset)
        elif panel.has_column(column):
            values = panel.column(column)
        else:
            continue
        values = values[np.isfinite(values)] * multiplier
        if len(values) == 0:
            raise ValueError(f"Cannot describe `{label}`: the panel is empty.")
        rows[label] = (
            float(values.mean()),
            float(values.std(ddof=0)),
            float(values.min()),
            float(values.max()),
            len(values),
        )
    frame = pd.DataFrame.from_dict(rows, orient="index", columns=DESCRIBE_COLUMNS)
    frame.index.name = "variable"
    return frame


def render_describe(frame, title="Descriptive Statistics"):
    formatters = {c: "{:.4f}".format for c in DESCRIBE_COLUMNS[:-1]}
    body = frame.to_string(formatters=formatters, index_names=False)
    return f"{title}\n{body}\n"


def format_cell(estimate, se, pvalue):
    """Renders `estimate` with stars and its standard error, as `0.9442*** (0.0322)`."""
    stars = econometrics.significance_stars(pvalue)
    return f"{estimate:.4f}{stars} ({se:.4f})"


def regression_table(fits):
    """Side-by-side coefficient table.

    Args:
        fits: dict of model name to `FitResult`, in column order.

    Returns:
        a DataFrame of rendered cells, one row per term in `TERM_ORDER`
        followed by `Observations` and `R-squared`.
    """
    terms = [t for t in TERM_ORDER if any(t in fit.labels for fit in fits.values())]
    columns = {}
    for name, fit in fits.items():
        cells = []
        for term in terms:
            if term in fit.labels:
                estimate, se, _, pvalue = fit.coefficient(term)
                cells.append(format_cell(estimate, se, pvalue))
            else:
                cells.append("")
        cells.append(str(fit.nobs))
        cells.append(f"{fit.rsquared:.4f}")
        columns[MODEL_TITLES.get(name, name)] = cells
    index = [TERM_NAMES[t] for t in terms] + ["Observations", "R-squared"]
    return pd.DataFrame(columns, index=index)


def render_regression(table, lags, omitted=None, title="OLS Regression Results"):
    lines = [f"{title} with Newey-West Standard Errors (lags = {lags})"]
    lines.append(table.to_string())
    lines.append(f"Standard errors in parentheses. {STARS_NOTE}")
    for name, reason in (omitted or {}).items():
        lines.append(f"{MODEL_TITLES.get(name, name)} omitted: {reason}")
    return "\n".join(lines) + "\n"


def coefficient_export(fits):
    """Long table `model,term,estimate,std_error,t_stat,p_value` at full precision."""
    rows = []
    for name, fit in fits.items():
        for i, term in enumerate(fit.labels):
            rows.append(
                {
                    "model": name,
                    "term": term,
                    "estimate": fit.params[i],
                    "std_error": fit.bse[i],
                    "t_stat": fit.tvalues[i],
                    "p_value": fit.pvalues[i],
                    "stars": econometrics.significance_stars(fit.pvalues[i]),
                }
            )
    return pd.DataFrame(rows)


def statistics_export(fits):
    rows = []
    for name, fit in fits.items():
        rows.append(
            {
                "model": name,
                "cov_type": fit.cov_type,
                "nobs": fit.nobs,
                "rsquared": fit.rsquared,
                "rsquared_adj": fit.rsquared_adj,
                "fvalue": fit.fvalue,
                "f_pvalue": fit.f_pvalue,
                "first_stage_f": fit.extras.get("first_stage_f", np.nan),
            }
        )
    return pd.DataFrame(rows)


def vif_table(report):
    return pd.DataFrame(
        {"vif": report.values},
        index=pd.Index([TERM_NAMES.get(t, t) for t in report.labels], name="term"),
    )


def render_vif(frame):
    body = frame.to_string(formatters={"vif": "{:.2f}".format}, index_names=False)
    return f"Variance Inflation Factors\n{body}\n"
