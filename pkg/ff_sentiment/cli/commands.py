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
"""The subcommands of the `ff-sentiment` tool."""

import os

import pandas as pd
from absl import logging

import ff_sentiment
from ff_sentiment import econometrics
from ff_sentiment import event_study
from ff_sentiment import panel as panel_lib
from ff_sentiment import rolling
from ff_sentiment import sentiment
from ff_sentiment import simulation
from ff_sentiment.cli import config as config_lib
from ff_sentiment.cli import report
from ff_sentiment.econometrics import specs
from ff_sentiment.panel.columns import FACTORS
from ff_sentiment.panel.columns import PANEL
from ff_sentiment.utils import table_io

REGRESSION_MODELS = (specs.BASELINE, specs.AUGMENTED, specs.INTERACTION)
IV_MODEL = "iv"


def load_panel(config, assets=None):
    """Loads every input of `config` and merges them into one panel.

    Args:
        config: a `RunConfig`.
        assets: assets to keep, `EW` standing for the equal-weight basket of
            every asset in the return file.  Defaults to all assets.

    Returns:
        a `MergedPanel`.
    """
    factors = panel_lib.load_factor_table(config.factors, unit=config.unit)
    yields = panel_lib.load_yield_series(config.yields, unit=config.yields_unit)
    returns = panel_lib.load_returns(config.returns, unit=config.returns_unit)
    items = sentiment.load_items(config.sentiment)
    index = sentiment.build_sentiment_index(
        items,
        calendar=factors.index,
        window=config.hv_window,
        source_filter=set(config.source_filter) or None,
        policy=config.calendar_policy,
    )
    vix = panel_lib.load_vix_series(config.vix) if config.vix else None
    excess, _ = panel_lib.compute_excess_return(returns, factors[FACTORS.RF])
    if assets is not None:
        assets = list(assets)
        if panel_lib.EQUAL_WEIGHT in assets:
            excess = excess.join(panel_lib.equal_weight_basket(excess))
        unknown = [a for a in assets if a not in excess.columns]
        if unknown:
            raise ValueError(
                f"Unknown assets {unknown}. Available: {list(excess.columns)}"
            )
        excess = excess[assets]
    return panel_lib.merge_panel(factors, yields, index, vix=vix, excess_returns=excess)


def _header(config):
    return config.header(ff_sentiment.__version__)


def _write(config, frame, name, index=True):
    path = table_io.write_table(
        frame, os.path.join(config.out, name), header=_header(config), index=index
    )
    logging.info("Wrote %s", path)
    return path


def _report(config, text, name):
    print(text)
    return table_io.write_text(text, os.path.join(config.out, name))


def cmd_describe(config):
    """Writes the descriptive statistics of the merged panel."""
    panel = load_panel(config, [config.asset])
    table = report.describe_table(panel, config.asset)
    _write(config, table, "describe.csv")
    _report(config, report.render_describe(table), "describe.txt")
    return table


def _fit_models(panel, config):
    fits = {}
    omitted = {}
    designs = {}
    for name in REGRESSION_MODELS:
        spec = econometrics.RegressionSpec.from_name(name)
        try:
            designs[name] = econometrics.build_design(panel, spec, config.asset)
            fits[name] = econometrics.inference(
                econometrics.ols_fit(designs[name]),
                econometrics.NEWEY_WEST,
                lags=config.nw_lags,
            )
        except ValueError as e:
            omitted[name] = str(e)
            logging.warning("The %s model is omitted: %s", name, e)
    if config.iv_lags:
        try:
            fits[IV_MODEL] = _fit_iv(panel, config)
        except ValueError as e:
            omitted[IV_MODEL] = str(e)
            logging.warning("The IV model is omitted: %s", e)
    return fits, omitted, designs


def _fit_iv(panel, config):
    shocked = econometrics.add_lagged_shocks(panel, PANEL.S_T, config.iv_lags)
    design = econometrics.build_design(
        shocked, econometrics.RegressionSpec.augmented(), config.asset
    )
    labels = [econometrics.shock_label(PANEL.S_T, lag) for lag in config.iv_lags]
    instruments = {label: shocked.column(label) for label in labels}
    return econometrics.two_stage_least_squares(
        design,
        PANEL.S_T,
        instruments,
        cov_type=econometrics.NEWEY_WEST,
        lags=config.nw_lags,
    )


def cmd_regress(config):
    """Fits the baseline, sentiment and interaction models side by side.

    Every model uses the same panel rows.  A model that cannot be estimated is
    left out of the table with its reason.
    """
    panel = load_panel(config, [config.asset])
    fits, omitted, designs = _fit_models(panel, config)
    if not fits:
        raise ValueError(f"No model could be estimated: {omitted}")
    table = report.regression_table(fits)
    text = report.render_regression(table, config.nw_lags, omitted)
    if specs.INTERACTION in designs:
        vif = econometrics.vif(designs[specs.INTERACTION])
        vif_frame = report.vif_table(vif)
        _write(config, vif_frame, "vif.csv")
        text += "\n" + report.render_vif(vif_frame)
    _write(config, report.coefficient_export(fits), "regress.csv", index=False)
    _write(config, report.statistics_export(fits), "regress_stats.csv", index=False)
    _report(config, text, "regress.txt")
    return table, fits


def _day(date):
    return "" if date is None else f"{date:%Y-%m-%d}"


def _share_rows(paths, config):
    ranges = [(None, None)] + config.ranges()
    rows = []
    for window, path in paths.items():
        for target in path.targets:
            changes = rolling.sign_changes(path, target)
            for start, end in ranges:
                span = f"{_day(start)}:{_day(end)}"
                try:
                    share = rolling.significance_share(
                        path, config.share_level, target, start, end
                    )
                except ValueError as e:
                    logging.warning("No share for W=%d over %s: %s", window, span, e)
                    share = float("nan")
                rows.append(
                    {
                        "window": window,
                        "target": target,
                        "start": _day(start),
                        "end": _day(end),
                        "level": config.share_level,
                        "share": share,
                        "sign_changes": len(changes),
                        "first_sign_change": _day(changes[0] if len(changes) else None),
                    }
                )
    return pd.DataFrame(rows)


def cmd_roll(config):
    """Writes one coefficient path per window length and a significance summary."""
    panel = load_panel(config, [config.asset])
    spec = econometrics.RegressionSpec.from_name(config.spec)
    paths = rolling.rolling_fit_horizons(
        panel,
        spec,
        config.asset,
        config.windows,
        step=config.step,
        targets=config.targets,
        nw_lags=config.nw_lags,
        num_workers=config.num_workers,
    )
    for window, path in paths.items():
        _write(config, path.to_export(), f"rolling_w{window}.csv")
    summary = _share_rows(paths, config)
    _write(config, summary, "rolling_summary.csv", index=False)
    print(summary.to_string(index=False))
    return paths


def _event_config(config):
    return event_study.EventWindowConfig(
        config.event_date, config.estimation_length, config.t1, config.t2
    )


def cmd_event(config):
    """Runs the event study and, when requested, its placebo batch."""
    panel = load_panel(config, config.assets or None)
    window = _event_config(config)
    result = event_study.run_event_study(panel, window, start=config.car_start)
    tag = f"{result.event_day:%Y-%m-%d}"
    export = result.to_export()
    _write(config, export, f"event_{tag}.csv")
    _write(config, result.asset_detail(), f"event_{tag}_assets.csv", index=False)
    if config.event_placebo:
        _placebo(config, panel, window, tag)
    print(export.to_string(float_format="{:.4f}".format))
    return result


def _placebo(config, panel, window, tag):
    start = 0 if config.car_start is None else config.car_start
    batch = event_study.placebo_batch(
        panel,
        window,
        config.placebo_events,
        config.seed,
        start=start,
        horizon=config.placebo_horizon,
    )
    _write(config, batch.frame, f"placebo_{tag}.csv")
    print(
        f"Placebo dates with a significant improvement at {batch.level:g}: "
        f"{batch.share_significant:.4f} of {len(batch.frame)}"
    )
    return batch


def cmd_placebo(config):
    """Runs the model comparison over weekday-matched placebo dates."""
    panel = load_panel(config, config.assets or None)
    window = _event_config(config)
    position = event_study.locate_event(panel.dates, window.event_date)
    return _placebo(config, panel, window, f"{panel.dates[position]:%Y-%m-%d}")


def cmd_simulate(config):
    """Writes a synthetic dataset in the input layouts, plus its true coefficients."""
    shocks = tuple(
        s for s in simulation.DEMO_CONFIG.event_shocks if s.day < config.n_days
    )
    simulation_config = simulation.DEMO_CONFIG.replace(
        n_days=config.n_days, seed=config.seed, event_shocks=shocks
    )
    synthetic = simulation.generate_panel(simulation_config)
    paths = simulation.write_panel_files(synthetic, config.out, header=_header(config))
    _write(config, synthetic.truth.coefficients, "truth.csv")
    for date in synthetic.truth.event_dates():
        logging.info("Injected event shock on %s", f"{date:%Y-%m-%d}")
    return paths


COMMANDS = {
    config_lib.DESCRIBE: cmd_describe,
    config_lib.REGRESS: cmd_regress,
    config_lib.ROLL: cmd_roll,
    config_lib.EVENT: cmd_event,
    config_lib.PLACEBO: cmd_placebo,
    config_lib.SIMULATE: cmd_simulate,
}


def run_command(config):
    return COMMANDS[config.validate().command](config)
