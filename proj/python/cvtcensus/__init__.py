"""Census tools for connected cubic vertex-transitive graphs."""

from ._core import (
    DegeneratePairError,
    Graph,
    are_isomorphic,
    automorphism_generators,
    automorphism_group_order,
    canonical_graph6,
    census,
    classify,
    complete,
    coxeter,
    diameter,
    girth,
    hamilton_cycle,
    is_vertex_transitive,
    ladder,
    local_action,
    merge,
    oracle_vertex_transitive,
    petersen,
    split,
    truncation,
)

__all__ = [
    "DegeneratePairError",
    "Graph",
    "are_isomorphic",
    "automorphism_generators",
    "automorphism_group_order",
    "canonical_graph6",
    "census",
    "classify",
    "complete",
    "coxeter",
    "diameter",
    "girth",
    "hamilton_cycle",
    "is_vertex_transitive",
    "ladder",
    "local_action",
    "merge",
    "oracle_vertex_transitive",
    "petersen",
    "split",
    "truncation",
]
