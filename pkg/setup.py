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

"""Setup script."""

import pathlib

from setuptools import find_packages
from setuptools import setup

HERE = pathlib.Path(__file__).parent
README = (HERE / "README.md").read_text()

setup(
    name="ff-sentiment",
    description="Sentiment-augmented Fama-French factor regressions, rolling "
    "coefficients and event studies.",
    long_description=README,
    long_description_content_type="text/markdown",
    author="ff_sentiment team",
    license="Apache License 2.0",
    install_requires=["packaging", "absl-py", "numpy>=1.20", "scipy", "pandas"],
    extras_require={
        "tests": ["flake8", "isort", "black", "pytest", "statsmodels"],
        "benchmarks": ["matplotlib", "seaborn"],
    },
    entry_points={
        "console_scripts": ["ff-sentiment=ff_sentiment.cli.main:run"],
    },
    classifiers=[
        "Programming Language :: Python",
        "Programming Language :: Python :: 3.8",
        "Operating System :: Unix",
        "Operating System :: Microsoft :: Windows",
        "Operating System :: MacOS",
        "Intended Audience :: Science/Research",
        "Intended Audience :: Financial and Insurance Industry",
        "Topic :: Scientific/Engineering",
        "Topic :: Office/Business :: Financial :: Investment",
    ],
    packages=find_packages(exclude=("*_test.py",)),
)
