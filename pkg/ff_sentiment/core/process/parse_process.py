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
from ff_sentiment.core.process.process import Process
from ff_sentiment.core.process.process import deserialize_process


def parse_process(param, param_name="process"):
    """Turns a loose process description into a `Process`.

    Accepts a `Process` (returned unchanged), a number (a `ConstantProcess`), a
    serialized `{"class_name", "config"}` dict, or a `(mean, stddev)` /
    `(mean, stddev, phi)` tuple (an `Ar1Process`).
    """
    if isinstance(param, Process):
        return param

    if isinstance(param, dict):
        return deserialize_process(param)

    if isinstance(param, (float, int)):
        return ConstantProcess(param)

    if isinstance(param, (tuple, list)) and len(param) in (2, 3):
        return Ar1Process(*param)

    raise ValueError(
        f"`{param_name}` should be a Process, a number, a serialized process or a "
        f"(mean, stddev[, phi]) tuple. Got {param_name}={param}"
    )
