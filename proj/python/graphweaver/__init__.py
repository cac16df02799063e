# Copyright 2026 graphweaver Contributors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Plan and simulate spider-photon weaving of photonic graph states."""

import json

from graphweaver import _core
from graphweaver._core import (
    CapacityError,
    Graph,
    InputError,
    count_operations,
    decompose_trails,
    formula_counts,
    lattice,
    min_trail_count,
    odd_degree_vertices,
    parse_dot,
    parse_edge_list,
    qnd_error,
    validate,
)

__all__ = [
    "CapacityError",
    "Graph",
    "InputError",
    "count_operations",
    "decompose_trails",
    "formula_counts",
    "lattice",
    "linear",
    "min_trail_count",
    "odd_degree_vertices",
    "parse_dot",
    "parse_edge_list",
    "plan",
    "qnd_error",
    "simulate",
    "validate",
]

__version__ = "0.1.0"


def plan(graph, blocks=()):
    """Schedule JSON text for weaving ``graph``; ``blocks`` are pre-linked vertex chains."""
    return _core.plan(graph, [list(b) for b in blocks])


def simulate(schedule, backend="vector", seed=0, capacity=22, forced_outcomes=()):
    """Run a schedule (JSON text) and return the report as a dict."""
    return json.loads(_core.simulate(schedule, backend, seed, capacity, list(forced_outcomes)))


def linear(n=3, trials=10000, seed=0):
    """Monte-Carlo report of the linear-optics string entangler as a dict."""
    return json.loads(_core.simulate_linear(n, trials, seed))
