"""Python access to the lieindex core: cascades, real forms, index computations."""

import json

from . import _lieindex as _core
from ._lieindex import CheckResult, criteria_in_scope, k_g, registry_names, run_criterion, table4_types

__all__ = [
    "CheckResult",
    "analyze",
    "cascade",
    "criteria_in_scope",
    "index",
    "k_g",
    "registry_names",
    "run_criterion",
    "table4",
    "table4_types",
]


def cascade(type_name: str) -> dict:
    """Cascade of strongly orthogonal roots for a simple type such as "E7"."""
    return json.loads(_core.cascade_json(type_name))


def analyze(name: str) -> dict:
    """Cascade data and property flags for a registered real form."""
    return json.loads(_core.analysis_json(name))


def index(name: str, subalgebra: str = "b") -> dict:
    """Index report for b, borel or minimal-parabolic of a real form."""
    return json.loads(_core.index_json(name, subalgebra))


def table4(type_name: str) -> dict:
    """Quasi-reductivity of the maximal parabolics of a simple type."""
    return json.loads(_core.table4_json(type_name))
