"""Character degree graph toolkit: graph constructors, clause classifier and
brute-force lemma checks, backed by the C++ core."""

from ._cdg import (
    PrimeGraph,
    check_nq,
    classify,
    counting_identity,
    family_graph,
    graph_from_degrees,
    singer_check,
    sl2_centralizer_check,
    zsygmondy,
)

__all__ = [
    "PrimeGraph",
    "check_nq",
    "classify",
    "counting_identity",
    "family_graph",
    "graph_from_degrees",
    "singer_check",
    "sl2_centralizer_check",
    "zsygmondy",
]
