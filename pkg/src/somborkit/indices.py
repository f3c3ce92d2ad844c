"""Degree-based graph indices: Sombor family and first Zagreb.

All are sums over edges of a term in the two endpoint degrees:

    sombor          sqrt(du^2 + dv^2)
    reduced_sombor  sqrt((du-1)^2 + (dv-1)^2)
    sombor_shifted  sqrt((du+1)^2 + (dv+1)^2)
    first_zagreb    du + dv            (= sum of squared vertex degrees)

``edge_sum`` is the common engine and the hook for searching over
arbitrary symmetric degree terms.
"""

from __future__ import annotations

import math
from typing import Callable

from .graphs import Graph


def _require_vertices(g: Graph) -> None:
    if g.n < 1:
        raise ValueError("index undefined on the order-0 graph")


def edge_sum(g: Graph, term: Callable[[int, int], float]) -> float:
    """Sum term(deg u, deg v) over the edges of g.

    ``term`` must be symmetric in its two arguments.
    """
    _require_vertices(g)
    deg = g.degrees()
    return sum(term(deg[u], deg[v]) for u, v in g.edges())


def sombor(g: Graph) -> float:
    _require_vertices(g)
    deg = g.degrees()
    return sum(math.hypot(deg[u], deg[v]) for u, v in g.edges())


def reduced_sombor(g: Graph) -> float:
    _require_vertices(g)
    deg = g.degrees()
    return sum(math.hypot(deg[u] - 1, deg[v] - 1) for u, v in g.edges())


def sombor_shifted(g: Graph) -> float:
    _require_vertices(g)
    deg = g.degrees()
    return sum(math.hypot(deg[u] + 1, deg[v] + 1) for u, v in g.edges())


def first_zagreb(g: Graph) -> int:
    """Sum of squared vertex degrees, computed exactly in integers.

    The equivalent edge form (sum of endpoint-degree sums) is evaluated
    too and the two must agree exactly.
    """
    _require_vertices(g)
    deg = g.degrees()
    by_vertex = sum(d * d for d in deg)
    by_edge = sum(deg[u] + deg[v] for u, v in g.edges())
    if by_vertex != by_edge:
        raise AssertionError(
            f"first Zagreb index disagreement: {by_vertex} (vertex sum) "
            f"vs {by_edge} (edge sum)"
        )
    return by_vertex
