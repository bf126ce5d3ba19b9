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
from ff_sentiment.event_study.abnormal import AbnormalReturns
from ff_sentiment.event_study.abnormal import CarPath
from ff_sentiment.event_study.abnormal import abnormal_returns
from ff_sentiment.event_study.abnormal import cumulative_ar
from ff_sentiment.event_study.abnormal import estimate_normal_model
from ff_sentiment.event_study.placebo import PlaceboBatch
from ff_sentiment.event_study.placebo import placebo_batch
from ff_sentiment.event_study.placebo import placebo_sample
from ff_sentiment.event_study.significance import BmpResult
from ff_sentiment.event_study.significance import bmp_test
from ff_sentiment.event_study.significance import compare_models
from ff_sentiment.event_study.significance import paired_t
from ff_sentiment.event_study.significance import standardized_cars
from ff_sentiment.event_study.study import EventStudyResult
from ff_sentiment.event_study.study import ModelEvent
from ff_sentiment.event_study.study import run_event_study
from ff_sentiment.event_study.window import EventWindowConfig
from ff_sentiment.event_study.window import locate_event
