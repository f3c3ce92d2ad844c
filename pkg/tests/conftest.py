"""Shared fixtures and independent test oracles.

The oracles here deliberately avoid the package's canonical-form and
generation code paths: automorphism counts come from a plain
degree-constrained backtrack over vertex bijections, labeled graph
counts from binomials and the component-of-vertex-1 recurrence, and
isomorphism ground truth from networkx.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from math import comb

import networkx as nx
import pytest
from hypothesis import strategies as st

from somborkit.graphs import Graph, graph_from_edges


def edge_slots(n: int) -> list[tuple[int, int]]:
    return list(combinations(range(n), 2))


def graph_from_mask(n: int, mask: int) -> Graph:
    slots = edge_slots(n)
    return graph_from_edges(n, [slots[i] for i in range(len(slots)) if mask >> i & 1])


@st.composite
def graphs_strategy(draw, min_n=1, max_n=7):
    n = draw(st.integers(min_n, max_n))
    mask = draw(st.integers(0, (1 << (n * (n - 1) // 2)) - 1))
    return graph_from_mask(n, mask)


def relabel(g: Graph, perm) -> Graph:
    return graph_from_edges(g.n, [(perm[u], perm[v]) for u, v in g.edges()])


def to_nx(g: Graph) -> nx.Graph:
    gn = nx.Graph()
    gn.add_nodes_from(range(g.n))
    gn.add_edges_from(g.edges())
    return gn


def aut_count(g: Graph) -> int:
    """Automorphism count by degree-constrained backtracking (independent
    of the package's canonical labeling)."""
    n, rows = g.n, g.rows
    deg = g.degrees()
    candidates = [[w for w in range(n) if deg[w] == deg[v]] for v in range(n)]
    assigned = [0] * n
    used = [False] * n
    count = 0

    def rec(v: int) -> None:
        nonlocal count
        if v == n:
            count += 1
            return
        for w in candidates[v]:
            if used[w]:
                continue
            if all((rows[v] >> u & 1) == (rows[w] >> assigned[u] & 1) for u in range(v)):
                used[w] = True
                assigned[v] = w
                rec(v + 1)
                used[w] = False

    rec(0)
    return count


@lru_cache(maxsize=None)
def labeled_graph_count(n: int, m: int) -> int:
    return comb(comb(n, 2), m)


@lru_cache(maxsize=None)
def labeled_connected_count(n: int, m: int) -> int:
    """Labeled connected (n, m)-graphs via the component-of-vertex-1
    recurrence on labeled totals."""
    if n == 0:
        return 0
    if n == 1:
        return 1 if m == 0 else 0
    total = labeled_graph_count(n, m)
    for k in range(1, n):
        for j in range(m + 1):
            ck = labeled_connected_count(k, j)
            if ck:
                total -= comb(n - 1, k - 1) * ck * labeled_graph_count(n - k, m - j)
    return total


@pytest.fixture(scope="session")
def connected_universe():
    """All connected isomorphism classes keyed by n, for n <= 7."""
    from somborkit.enumeration import connected_graphs

    def build(n: int) -> list[Graph]:
        out = []
        for m in range(0, n * (n - 1) // 2 + 1):
            out.extend(connected_graphs(n, m))
        return out

    return {n: build(n) for n in range(1, 8)}


@pytest.fixture(scope="session")
def full_universe():
    """All isomorphism classes (disconnected included) keyed by n, n <= 7."""
    from somborkit.enumeration import all_graphs

    def build(n: int) -> list[Graph]:
        out = []
        for m in range(0, n * (n - 1) // 2 + 1):
            out.extend(all_graphs(n, m))
        return out

    return {n: build(n) for n in range(1, 8)}
