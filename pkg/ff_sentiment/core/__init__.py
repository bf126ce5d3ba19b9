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
from ff_sentiment.core.process.ar1_process import Ar1Process
from ff_sentiment.core.process.constant_process import ConstantProcess
from ff_sentiment.core.process.parse_process import parse_process
from ff_sentiment.core.process.process import Process
from ff_sentiment.core.process.process import deserialize_process
from ff_sentiment.core.process.process import serialize_process
