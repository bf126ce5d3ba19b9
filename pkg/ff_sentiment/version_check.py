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

"""ff_sentiment dependency version check."""


import warnings

import numpy as np
import pandas as pd
from packaging.version import parse

MIN_NUMPY_VERSION = "1.20.0"
MIN_PANDAS_VERSION = "1.1.0"


def check_numpy_version():
    if parse(np.__version__) < parse(MIN_NUMPY_VERSION):
        warnings.warn(
            f"The NumPy package version needs to be at least {MIN_NUMPY_VERSION} \n"
            "for ff_sentiment to run. Currently, your NumPy version is \n"
            f"{np.__version__}. Please upgrade with \n"
            "`$ pip install --upgrade numpy`. \n"
            "You can use `pip freeze` to check afterwards that everything is "
            "ok.",
            ImportWarning,
        )


def check_pandas_version():
    if parse(pd.__version__) < parse(MIN_PANDAS_VERSION):
        warnings.warn(
            f"The pandas package version needs to be at least {MIN_PANDAS_VERSION} "
            f"for ff_sentiment to run. Currently, your pandas version is "
            f"{pd.__version__}. Please upgrade with "
            "`$ pip install --upgrade pandas`.",
            ImportWarning,
        )
