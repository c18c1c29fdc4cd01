# Copyright 2026 The paramp Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Open-system models of flux-pumped Josephson parametric amplifiers."""

import json as _json

from ._core import *  # noqa: F401,F403
from ._core import __version__, recipe, run_sweep_csv


def recipe_config(name):
    """Return a figure recipe as a dict."""
    return _json.loads(recipe(name))


def run_sweep(config):
    """Run a sweep given a config dict or JSON string; returns the CSV text."""
    if not isinstance(config, str):
        config = _json.dumps(config)
    return run_sweep_csv(config)
