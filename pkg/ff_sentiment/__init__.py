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
from ff_sentiment import core
from ff_sentiment import econometrics
from ff_sentiment import event_study
from ff_sentiment import panel
from ff_sentiment import rolling
from ff_sentiment import sentiment
from ff_sentiment import simulation
from ff_sentiment import utils
from ff_sentiment import version_check
from ff_sentiment.core import Ar1Process
from ff_sentiment.core import ConstantProcess
from ff_sentiment.core import Process

version_check.check_numpy_version()
version_check.check_pandas_version()

__version__ = "0.1.0"
