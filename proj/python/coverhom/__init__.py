"""Exact homology representations of finite regular graph covers."""

try:
    from ._core import (
        Cover,
        FoldedGraph,
        enumerate_primitives,
        enumerate_primitive_commutators,
        registered_scenarios,
        run_scenario,
    )
except ImportError:  # in-tree test runs place _core next to the package
    from _core import (
        Cover,
        FoldedGraph,
        enumerate_primitives,
        enumerate_primitive_commutators,
        registered_scenarios,
        run_scenario,
    )

__all__ = [
    "Cover",
    "FoldedGraph",
    "enumerate_primitives",
    "enumerate_primitive_commutators",
    "registered_scenarios",
    "run_scenario",
]
