"""Simple undirected graphs on bitset adjacency rows, with graph6 I/O.

Vertices are 0..n-1.  Each adjacency row is a Python int used as a bit set,
so a graph is just ``(n, rows)`` with ``rows[u] >> v & 1`` telling whether
uv is an edge.  Graphs are immutable; every operation here is a pure
function returning fresh values.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator


class Graph6Error(ValueError):
    """Raised on malformed graph6 text."""


@dataclass(frozen=True, slots=True)
class Graph:
    """Immutable simple graph: ``rows[u]`` is the neighbour bit set of u.

    Invariants (guaranteed by the constructors in this module):
    adjacency is symmetric, the diagonal is zero, and ``m`` equals half
    the total population count of the rows.
    """

    n: int
    rows: tuple[int, ...]
    m: int

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self.rows]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield edges (u, v) with u < v, in ascending order."""
        for u in range(self.n):
            rest = self.rows[u] >> (u + 1)
            v = u + 1
            while rest:
                if rest & 1:
                    yield (u, v)
                rest >>= 1
                v += 1

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"Graph(n={self.n}, m={self.m})"


def _from_rows(n: int, rows: tuple[int, ...]) -> Graph:
    return Graph(n, rows, sum(r.bit_count() for r in rows) // 2)


def graph_from_edges(n: int, edges) -> Graph:
    """Build a graph on n vertices from (u, v) pairs.

    Duplicate pairs collapse to one edge.  Loops and out-of-range
    endpoints are rejected.
    """
    if n < 0:
        raise ValueError(f"vertex count must be non-negative, got {n}")
    rows = [0] * n
    for u, v in edges:
        if u == v:
            raise ValueError(f"loop at vertex {u} rejected (simple graphs only)")
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return _from_rows(n, tuple(rows))


def degree_sequence(g: Graph) -> tuple[int, ...]:
    """Vertex degrees sorted non-increasingly; sums to 2m."""
    return tuple(sorted(g.degrees(), reverse=True))


def max_degree(g: Graph) -> int:
    if g.n == 0:
        raise ValueError("max_degree undefined on the empty graph")
    return max(g.degrees())


def _reachable(rows: tuple[int, ...], start: int) -> int:
    """Bit set of vertices reachable from start (bitset BFS)."""
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        f = frontier
        while f:
            v = (f & -f).bit_length() - 1
            nxt |= rows[v]
            f &= f - 1
        frontier = nxt & ~seen
        seen |= frontier
    return seen


def component_count(g: Graph) -> int:
    remaining = (1 << g.n) - 1
    count = 0
    while remaining:
        start = (remaining & -remaining).bit_length() - 1
        remaining &= ~_reachable(g.rows, start)
        count += 1
    return count


def is_connected(g: Graph) -> bool:
    """True iff g has exactly one component (the order-0 graph counts as
    disconnected)."""
    if g.n == 0:
        return False
    return _reachable(g.rows, 0) == (1 << g.n) - 1


def cyclomatic_number(g: Graph) -> int:
    """Number of independent cycles: m - n + (number of components)."""
    return g.m - g.n + component_count(g)


@dataclass(frozen=True, slots=True)
class EdgeStats:
    """Edge-degree histogram and endpoint-degree pair counts.

    ``edge_degree_counts[k]`` is the number of edges uv with
    deg(u) + deg(v) - 2 = k (the degree of uv in the line graph);
    ``endpoint_degree_counts[(i, j)]`` with i <= j counts edges whose
    endpoint degrees are {i, j}.  Both count maps sum to m.
    """

    edge_degree_counts: dict[int, int]
    endpoint_degree_counts: dict[tuple[int, int], int]

    @property
    def isolated_edges(self) -> int:
        """Count of edges of edge-degree 0, i.e. K2 components."""
        return self.edge_degree_counts.get(0, 0)


def edge_stats(g: Graph) -> EdgeStats:
    deg = g.degrees()
    by_edge_degree: dict[int, int] = {}
    by_pair: dict[tuple[int, int], int] = {}
    for u, v in g.edges():
        du, dv = deg[u], deg[v]
        k = du + dv - 2
        by_edge_degree[k] = by_edge_degree.get(k, 0) + 1
        pair = (du, dv) if du <= dv else (dv, du)
        by_pair[pair] = by_pair.get(pair, 0) + 1
    return EdgeStats(by_edge_degree, by_pair)


def delete_vertex(g: Graph, v: int) -> Graph:
    """Remove vertex v; labels above v shift down by one."""
    if not (0 <= v < g.n):
        raise ValueError(f"vertex {v} out of range for n={g.n}")
    low = (1 << v) - 1
    rows = tuple(
        (g.rows[u] & low) | ((g.rows[u] >> (v + 1)) << v)
        for u in range(g.n)
        if u != v
    )
    return Graph(g.n - 1, rows, g.m - g.degree(v))


# ---------------------------------------------------------------------------
# graph6
#
# Header N(n): one byte n+63 for n <= 62, else '~' followed by three bytes
# holding n in 18 bits, big-endian, 6 bits per byte, each +63.  Body R(x):
# the upper-triangle bits x(0,1), x(0,2), x(1,2), x(0,3), ... taken
# column-by-column, packed 6 per byte MSB-first, zero-padded, each +63.
# ---------------------------------------------------------------------------

GRAPH6_MAX_N = 64


def encode_graph6(g: Graph) -> str:
    if g.n > GRAPH6_MAX_N:
        raise ValueError(f"graph6 encoding supported for n <= {GRAPH6_MAX_N}, got n={g.n}")
    n = g.n
    if n <= 62:
        out = [chr(n + 63)]
    else:
        out = ["~", chr((n >> 12 & 63) + 63), chr((n >> 6 & 63) + 63), chr((n & 63) + 63)]
    acc = 0
    nbits = 0
    for v in range(1, n):
        col = g.rows[v]
        for u in range(v):
            acc = acc << 1 | (col >> u & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = 0
                nbits = 0
    if nbits:
        acc <<= 6 - nbits
        out.append(chr(acc + 63))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    """Parse one graph6 line (strict: exact length, clean padding)."""
    s = text.strip()
    if not s:
        raise Graph6Error("empty graph6 string")
    vals = []
    for ch in s:
        c = ord(ch)
        if not 63 <= c <= 126:
            raise Graph6Error(f"character {ch!r} outside graph6 range")
        vals.append(c - 63)
    if vals[0] == 63:  # '~' long-form header
        if len(vals) < 4:
            raise Graph6Error("truncated long-form size header")
        n = vals[1] << 12 | vals[2] << 6 | vals[3]
        body = vals[4:]
    else:
        n = vals[0]
        body = vals[1:]
    if n > GRAPH6_MAX_N:
        raise Graph6Error(f"n={n} exceeds supported maximum {GRAPH6_MAX_N}")
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(body) != nbytes:
        raise Graph6Error(
            f"body length {len(body)} does not match n={n} (expected {nbytes} bytes)"
        )
    rows = [0] * n
    i = 0
    for v in range(1, n):
        for u in range(v):
            if body[i // 6] >> (5 - i % 6) & 1:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
            i += 1
    if nbits % 6 and body and body[-1] & ((1 << (6 - nbits % 6)) - 1):
        raise Graph6Error("padding bits beyond the upper triangle are set")
    return _from_rows(n, tuple(rows))
