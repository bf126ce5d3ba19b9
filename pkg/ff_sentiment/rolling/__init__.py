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
from ff_sentiment.rolling.rolling import DEFAULT_HORIZONS
from ff_sentiment.rolling.rolling import CoefficientPath
from ff_sentiment.rolling.rolling import rolling_fit
from ff_sentiment.rolling.rolling import rolling_fit_horizons
from ff_sentiment.rolling.rolling import sign_changes
from ff_sentiment.rolling.rolling import significance_share
