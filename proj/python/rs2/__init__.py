# Copyright 2026 The rs2 Authors
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

"""Deterministic 2-ruling sets in simulated MPC."""

import json

from rs2 import _core
from rs2._core import (
    CSV_SCHEMA,
    REPORT_SCHEMA,
    BudgetExceeded,
    Graph,
    GraphFormatError,
    ModelViolation,
    generate,
    greedy_mis,
    load_graph,
)

__all__ = [
    "CSV_SCHEMA",
    "REPORT_SCHEMA",
    "BudgetExceeded",
    "Graph",
    "GraphFormatError",
    "ModelViolation",
    "generate",
    "greedy_mis",
    "linear",
    "load_graph",
    "sublinear",
    "verify",
]


def linear(graph, **params):
    """Runs the linear-memory algorithm and returns the report as a dict."""
    return json.loads(_core.run_linear(graph, **params))


def sublinear(graph, **params):
    """Runs the sublinear-memory algorithm and returns the report as a dict."""
    return json.loads(_core.run_sublinear(graph, **params))


def verify(graph, members, beta=2):
    return json.loads(_core.verify(graph, list(members), beta))
