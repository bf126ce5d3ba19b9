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
from ff_sentiment.panel.columns import FACTORS
from ff_sentiment.panel.columns import ITEMS
from ff_sentiment.panel.columns import PANEL
from ff_sentiment.panel.columns import RETURNS
from ff_sentiment.panel.columns import VIX
from ff_sentiment.panel.columns import YIELDS
from ff_sentiment.panel.loaders import SchemaError
from ff_sentiment.panel.loaders import load_factor_table
from ff_sentiment.panel.loaders import load_returns
from ff_sentiment.panel.loaders import load_vix_series
from ff_sentiment.panel.loaders import load_yield_series
from ff_sentiment.panel.loaders import weekend_dates
from ff_sentiment.panel.merge import EQUAL_WEIGHT
from ff_sentiment.panel.merge import MergedPanel
from ff_sentiment.panel.merge import compute_excess_return
from ff_sentiment.panel.merge import equal_weight_basket
from ff_sentiment.panel.merge import merge_panel
from ff_sentiment.panel.units import convert_units
