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
from ff_sentiment.cli.commands import cmd_describe
from ff_sentiment.cli.commands import cmd_event
from ff_sentiment.cli.commands import cmd_placebo
from ff_sentiment.cli.commands import cmd_regress
from ff_sentiment.cli.commands import cmd_roll
from ff_sentiment.cli.commands import cmd_simulate
from ff_sentiment.cli.commands import load_panel
from ff_sentiment.cli.commands import run_command
from ff_sentiment.cli.config import RunConfig
