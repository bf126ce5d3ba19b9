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
"""Event studies under several normal-return models."""

import dataclasses

import numpy as np
import pandas as pd
from absl import logging

from ff_sentiment import econometrics
from ff_sentiment.econometrics import specs as specs_lib
from ff_sentiment.event_study import abnormal as abnormal_lib
from ff_sentiment.event_study import significance
from ff_sentiment.event_study import window as window_lib


@dataclasses.dataclass(frozen=True, eq=False)
class ModelEvent:
    """Per-asset fits and abnormal returns under one normal-return model.

    Attributes:
        spec: the `RegressionSpec` of the normal model.
        fits: dict of asset to estimation-window `FitResult`.
        abnormal: dict of asset to `AbnormalReturns`.
        cars: DataFrame of CARs from `start`, indexed by event time `t`, one
            column per asset.
        bmp: DataFrame indexed by `t` with `bmp_z`, `bmp_p` and `n_assets`;
            NaN where the test is undefined.
    """

    spec: object
    fits: dict
    abnormal: dict
    cars: pd.DataFrame
    bmp: pd.DataFrame

    @property
    def mean_car(self):
        return self.cars.mean(axis=1)


@dataclasses.dataclass(frozen=True, eq=False)
class EventStudyResult:
    """Event-study output for one event.

    Attributes:
        config: the `EventWindowConfig`.
        event_day: trading date of t=0.
        start: first event time of the CARs.
        models: dict of model name to `ModelEvent`, in fitting order.
        comparison: `compare_models` frame of the baseline and augmented
            models, or None when either is absent.
    """

    config: object
    event_day: pd.Timestamp
    start: int
    models: dict
    comparison: pd.DataFrame = None

    def to_export(self):
        """Returns one row per event time with the per-model summaries."""
        columns = {}
        for name, model in self.models.items():
            columns[f"mean_car_{name}"] = model.mean_car
            columns[f"bmp_z_{name}"] = model.bmp["bmp_z"]
            columns[f"bmp_p_{name}"] = model.bmp["bmp_p"]
        export = pd.DataFrame(columns)
        if self.comparison is not None:
            export = export.join(self.comparison)
        export.index.name = "event_time"
        return export

    def asset_detail(self):
        """Returns the per-asset abnormal returns and CARs in long layout."""
        frames = []
        for name, model in self.models.items():
            for asset, abnormal in model.abnormal.items():
                car = model.cars[asset].reindex(abnormal.event_time)
                frames.append(
                    pd.DataFrame(
                        {
                            "model": name,
                            "asset": asset,
                            "event_time": abnormal.event_time,
                            "date": abnormal.dates,
                            "ar": abnormal.values,
                            "car": car.to_numpy(),
                            "forecast_variance": abnormal.forecast_variance,
                        }
                    )
                )
        return pd.concat(frames, ignore_index=True)


def _bmp_path(abnormals, horizons, start):
    rows = []
    for horizon in horizons:
        try:
            result = significance.bmp_test(abnormals, horizon, start)
            rows.append((result.z, result.pvalue, result.n_assets))
        except ValueError as e:
            logging.warning("Cross-sectional test skipped at t=%d: %s", horizon, e)
            rows.append((np.nan, np.nan, 0))
    return pd.DataFrame(
        rows, columns=["bmp_z", "bmp_p", "n_assets"], index=pd.Index(horizons, name="t")
    )


def _model_event(panel, assets, config, spec, start):
    fits = {}
    abnormal = {}
    for asset in assets:
        fits[asset] = abnormal_lib.estimate_normal_model(panel, asset, config, spec)
        abnormal[asset] = abnormal_lib.abnormal_returns(
            fits[asset], panel, asset, config
        )
    horizons = config.event_times[config.event_times >= start]
    cars = pd.DataFrame(
        {
            asset: abnormal_lib.cumulative_ar(ar, start).values
            for asset, ar in abnormal.items()
        },
        index=pd.Index(horizons, name="t"),
    )
    if len(assets) < 2:
        logging.warning(
            "%s model: single-asset event, the cross-sectional test is skipped",
            spec.name,
        )
        bmp = pd.DataFrame(
            {"bmp_z": np.nan, "bmp_p": np.nan, "n_assets": 0},
            index=pd.Index(horizons, name="t"),
        )
    else:
        bmp = _bmp_path(list(abnormal.values()), horizons, start)
    return ModelEvent(spec=spec, fits=fits, abnormal=abnormal, cars=cars, bmp=bmp)


def run_event_study(panel, config, assets=None, specs=None, start=None):
    """Fits the normal models and tests the CARs around one event.

    Args:
        panel: a `MergedPanel`.
        config: an `EventWindowConfig`.
        assets: assets to study. Defaults to every asset of the panel.
        specs: `RegressionSpec`s of the normal models. Defaults to the
            baseline and augmented models.
        start: first event time of the CARs. Defaults to `config.t1`.

    Returns:
        an `EventStudyResult`.
    """
    assets = tuple(panel.assets if assets is None else assets)
    if not assets:
        raise ValueError("An event study needs at least one asset.")
    if specs is None:
        specs = (
            econometrics.RegressionSpec.baseline(),
            econometrics.RegressionSpec.augmented(),
        )
    start = config.t1 if start is None else start
    if not config.t1 <= start <= config.t2:
        raise ValueError(
            f"`start` should lie in [{config.t1}, {config.t2}]. Got start={start}"
        )
    position = window_lib.locate_event(panel.dates, config.event_date)
    models = {
        spec.name: _model_event(panel, assets, config, spec, start) for spec in specs
    }
    comparison = None
    if specs_lib.BASELINE in models and specs_lib.AUGMENTED in models:
        comparison = significance.compare_models(
            models[specs_lib.BASELINE].abnormal,
            models[specs_lib.AUGMENTED].abnormal,
            start=start,
        )
    logging.info(
        "Event study on %s: %d asset(s), %d model(s), window [%d, %d]",
        f"{panel.dates[position]:%Y-%m-%d}",
        len(assets),
        len(models),
        config.t1,
        config.t2,
    )
    return EventStudyResult(
        config=config,
        event_day=panel.dates[position],
        start=start,
        models=models,
        comparison=comparison,
    )
