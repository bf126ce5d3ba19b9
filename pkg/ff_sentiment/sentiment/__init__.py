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
from ff_sentiment.sentiment.index import DailySentiment
from ff_sentiment.sentiment.index import SentimentVolatilitySeries
from ff_sentiment.sentiment.index import aggregate_daily
from ff_sentiment.sentiment.index import assign_to_calendar
from ff_sentiment.sentiment.index import build_sentiment_index
from ff_sentiment.sentiment.index import daily_index
from ff_sentiment.sentiment.index import rolling_volatility
from ff_sentiment.sentiment.items import TAGS
from ff_sentiment.sentiment.items import SentimentItem
from ff_sentiment.sentiment.items import load_items
from ff_sentiment.sentiment.items import parse_source
from ff_sentiment.sentiment.items import score_item
from ff_sentiment.sentiment.items import stratify
from ff_sentiment.sentiment.lexicon import DEFAULT_LEXICON
from ff_sentiment.sentiment.lexicon import Lexicon
from ff_sentiment.sentiment.lexicon import lexicon_score
from ff_sentiment.sentiment.lexicon import load_lexicon
from ff_sentiment.sentiment.lexicon import normalize_text
