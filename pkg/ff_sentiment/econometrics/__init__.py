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
from ff_sentiment.econometrics.covariance import CLASSICAL
from ff_sentiment.econometrics.covariance import COV_TYPES
from ff_sentiment.econometrics.covariance import DEFAULT_LAGS
from ff_sentiment.econometrics.covariance import HC0
from ff_sentiment.econometrics.covariance import NEWEY_WEST
from ff_sentiment.econometrics.covariance import classical_cov
from ff_sentiment.econometrics.covariance import hc0_cov
from ff_sentiment.econometrics.covariance import newey_west_cov
from ff_sentiment.econometrics.design import DesignMatrix
from ff_sentiment.econometrics.design import InsufficientDataError
from ff_sentiment.econometrics.design import build_design
from ff_sentiment.econometrics.iv import add_lagged_shocks
from ff_sentiment.econometrics.iv import shock_label
from ff_sentiment.econometrics.iv import two_stage_least_squares
from ff_sentiment.econometrics.ols import FitResult
from ff_sentiment.econometrics.ols import RankDeficientError
from ff_sentiment.econometrics.ols import inference
from ff_sentiment.econometrics.ols import ols_fit
from ff_sentiment.econometrics.ols import significance_stars
from ff_sentiment.econometrics.specs import INTERCEPT
from ff_sentiment.econometrics.specs import REGRESSORS
from ff_sentiment.econometrics.specs import RegressionSpec
from ff_sentiment.econometrics.vif import VifReport
from ff_sentiment.econometrics.vif import vif
