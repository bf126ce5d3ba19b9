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
"""Command-line entry point.

Usage:

```
ff-sentiment <describe|regress|roll|event|placebo|simulate> [--flags]
ff-sentiment regress --flagfile=run.cfg --nw_lags=3
```

Flags given after `--flagfile` override the file.
"""

from absl import app
from absl import flags
from absl import logging

from ff_sentiment.cli import commands
from ff_sentiment.cli import config as config_lib

FLAGS = flags.FLAGS

flags.DEFINE_string("factors", None, "Daily factor table date,mkt_rf,...,rf.")
flags.DEFINE_string("yields", None, "10-year yield file date,dgs10_yield.")
flags.DEFINE_string("returns", None, "Asset returns, long or wide layout.")
flags.DEFINE_string("sentiment", None, "Scored items date,source,p_pos,p_neu,p_neg.")
flags.DEFINE_string("vix", None, "Optional VIX file date,vix_close.")
flags.DEFINE_string("asset", "EW", "Asset to model; EW is the equal-weight basket.")
flags.DEFINE_list("assets", [], "Assets of the event study; all when empty.")
flags.DEFINE_enum("unit", "percent", ["percent", "fraction"], "Factor file unit.")
flags.DEFINE_enum("yields_unit", "percent", ["percent", "fraction"], "Yield unit.")
flags.DEFINE_enum("returns_unit", "fraction", ["percent", "fraction"], "Return unit.")
flags.DEFINE_enum(
    "spec", "augmented", ["baseline", "augmented", "interaction"], "Rolling model."
)
flags.DEFINE_integer("hv_window", 21, "Window of the sentiment volatility.")
flags.DEFINE_integer("nw_lags", 5, "Newey-West lag truncation.")
flags.DEFINE_list("windows", ["60"], "Rolling window lengths.")
flags.DEFINE_integer("step", 1, "Advance between rolling windows.")
flags.DEFINE_list("targets", ["s_t"], "Coefficients tracked by the rolling fit.")
flags.DEFINE_list("share_ranges", [], "start:end date ranges of significance shares.")
flags.DEFINE_float("share_level", 0.10, "Level of the significance share.")
flags.DEFINE_string("event_date", None, "Event date YYYY-MM-DD.")
flags.DEFINE_integer("estimation_length", 120, "Estimation window length T_e.")
flags.DEFINE_integer("t1", -10, "First event-window day.")
flags.DEFINE_integer("t2", 10, "Last event-window day.")
flags.DEFINE_integer("car_start", None, "First event time of the CARs.")
flags.DEFINE_bool("event_placebo", False, "Also run the placebo batch in `event`.")
flags.DEFINE_integer("placebo_events", 20, "Number of placebo dates.")
flags.DEFINE_integer("placebo_horizon", 2, "Event time of the placebo comparison.")
flags.DEFINE_list("source_filter", [], "Source tags kept in the sentiment index.")
flags.DEFINE_enum(
    "calendar_policy", "next_day", ["next_day", "drop"], "Non-trading-day items."
)
flags.DEFINE_list("iv_lags", [], "Lags of the sentiment-shock instruments.")
flags.DEFINE_integer("n_days", 724, "Panel length written by `simulate`.")
flags.DEFINE_integer("num_workers", None, "Threads for rolling windows.")
flags.DEFINE_string("out", ".", "Output directory.")
flags.DEFINE_integer("seed", 724, "Master seed of every random draw.")


def config_from_flags(command):
    return config_lib.RunConfig(
        command=command,
        factors=FLAGS.factors,
        yields=FLAGS.yields,
        returns=FLAGS.returns,
        sentiment=FLAGS.sentiment,
        vix=FLAGS.vix,
        asset=FLAGS.asset,
        unit=FLAGS.unit,
        yields_unit=FLAGS.yields_unit,
        returns_unit=FLAGS.returns_unit,
        spec=FLAGS.spec,
        hv_window=FLAGS.hv_window,
        nw_lags=FLAGS.nw_lags,
        windows=FLAGS.windows,
        step=FLAGS.step,
        targets=FLAGS.targets,
        share_ranges=FLAGS.share_ranges,
        share_level=FLAGS.share_level,
        event_date=FLAGS.event_date,
        estimation_length=FLAGS.estimation_length,
        t1=FLAGS.t1,
        t2=FLAGS.t2,
        car_start=FLAGS.car_start,
        assets=FLAGS.assets,
        event_placebo=FLAGS.event_placebo,
        placebo_events=FLAGS.placebo_events,
        placebo_horizon=FLAGS.placebo_horizon,
        source_filter=FLAGS.source_filter,
        calendar_policy=FLAGS.calendar_policy,
        iv_lags=FLAGS.iv_lags,
        n_days=FLAGS.n_days,
        num_workers=FLAGS.num_workers,
        out=FLAGS.out,
        seed=FLAGS.seed,
    )


def main(argv):
    if len(argv) != 2:
        raise app.UsageError(
            f"Expected exactly one command out of {config_lib.COMMANDS}. "
            f"Got {argv[1:]}"
        )
    command = argv[1]
    if command not in config_lib.COMMANDS:
        raise app.UsageError(
            f"Unknown command `{command}`. Expected one of {config_lib.COMMANDS}"
        )
    try:
        commands.run_command(config_from_flags(command))
    except (ValueError, OSError) as e:
        logging.error("%s failed: %s", command, " ".join(str(e).split()))
        return 1
    return 0


def run():
    app.run(main)


if __name__ == "__main__":
    run()
