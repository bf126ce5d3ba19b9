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

_REGISTRY = {}


def register_process(cls):
    """Makes a `Process` subclass reachable from `deserialize_process()`."""
    _REGISTRY[cls.__name__] = cls
    return cls


@register_process
class Process:
    """Process represents a univariate daily series generator for simulations.

    Process should be subclassed and implement a `__call__()` method that returns
    a float64 numpy array of length `n` drawn with the supplied
    `numpy.random.Generator`.  All randomness must come from that generator so
    that a simulation is reproducible from its seed.
    """

    def __call__(self, n, rng):
        raise NotImplementedError(
            "Process subclasses must implement a `__call__()` method."
        )

    def get_config(self):
        return {}

    @classmethod
    def from_config(cls, config):
        return cls(**config)


def serialize_process(process):
    return {"class_name": type(process).__name__, "config": process.get_config()}


def deserialize_process(config):
    class_name = config["class_name"]
    if class_name not in _REGISTRY:
        raise ValueError(
            f"Unknown process class `{class_name}`. "
            f"Expected one of {sorted(_REGISTRY)}."
        )
    return _REGISTRY[class_name].from_config(config["config"])
