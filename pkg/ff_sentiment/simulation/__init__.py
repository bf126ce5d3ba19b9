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
from ff_sentiment.simulation.config import DEFAULT_COEFFICIENTS
from ff_sentiment.simulation.config import EventShock
from ff_sentiment.simulation.config import RegimeBreak
from ff_sentiment.simulation.config import SimulationConfig
from ff_sentiment.simulation.generator import SyntheticPanel
from ff_sentiment.simulation.generator import Truth
from ff_sentiment.simulation.generator import generate_panel
from ff_sentiment.simulation.generator import replication_seeds
from ff_sentiment.simulation.oracles import brute_force_hac
from ff_sentiment.simulation.oracles import brute_force_ols
from ff_sentiment.simulation.writer import DEMO_CONFIG
from ff_sentiment.simulation.writer import write_demo
from ff_sentiment.simulation.writer import write_panel_files
