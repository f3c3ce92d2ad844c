"""Isomorph-free generation of small graphs and brute-force extremal search.

Canonical form
    The canonical form of a graph is the lexicographically smallest
    row-by-row adjacency encoding over all vertex orders that list the
    cells of an iterated degree-refinement partition in ascending color
    order.  The refinement keys are graph-invariant, so the constrained
    minimum is reached by isomorphic graphs and only by them: equal forms
    iff isomorphic.  The search is a prefix-pruned backtrack; with the
    order capped at 10 vertices the fallback of walking every admissible
    order stays feasible even for the regular graphs that refinement
    cannot split.

Generation
    Graphs with m edges are produced by adding one edge to every
    canonical representative with m-1 edges and deduplicating by
    canonical form (every graph contains an (m-1)-edge subgraph, so the
    level-by-level closure is exhaustive).  Levels are cached per (n, m)
    and returned in ascending canonical order, which makes every
    downstream artifact deterministic regardless of worker count.

Scope caps: n <= 8 for arbitrary m; n = 9 only for m <= 10 (cyclomatic
number at most 2 on the connected universe).
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable

from .graphs import Graph, is_connected, max_degree
from .indices import edge_sum, reduced_sombor, sombor

CANON_MAX_N = 10
SCOPE_MAX_N = 9
N9_MAX_M = 10

UNIQUENESS_GAP = 1e-6
VALUE_TIE_TOL = 1e-9

_HUGE = 1 << 70  # larger than any (n-1)-bit row encoding


class AmbiguousMaximumError(RuntimeError):
    """A single maximizer was found but the runner-up gap is too small to
    distinguish from a float tie; the run refuses to claim uniqueness."""


def _wl_partition(n: int, rows: tuple[int, ...]) -> list[int]:
    """Iterated neighbour-degree refinement; returns invariant color ints."""
    colors = [rows[v].bit_count() for v in range(n)]
    ncolors = len(set(colors))
    while True:
        keys = []
        for v in range(n):
            nb = rows[v]
            sig = []
            while nb:
                sig.append(colors[(nb & -nb).bit_length() - 1])
                nb &= nb - 1
            sig.sort()
            keys.append((colors[v], tuple(sig)))
        palette = {k: i for i, k in enumerate(sorted(set(keys)))}
        colors = [palette[k] for k in keys]
        if len(palette) == ncolors:
            return colors
        ncolors = len(palette)


def _canonical_bits(n: int, rows: tuple[int, ...]) -> tuple[int, ...]:
    """Minimal row-bits encoding (b_1..b_{n-1}) over admissible orders.

    b_p holds the adjacency of the vertex at position p to positions
    0..p-1, earliest position as most significant bit.
    """
    if n <= 1:
        return ()
    colors = _wl_partition(n, rows)
    cells: dict[int, list[int]] = {}
    for v in range(n):
        cells.setdefault(colors[v], []).append(v)
    pos_color = sorted(colors)
    best = [_HUGE] * (n - 1)
    placed = [0] * n
    used = [False] * n

    def extend(p: int) -> None:
        if p == n:
            return
        cands = []
        for v in cells[pos_color[p]]:
            if not used[v]:
                row = rows[v]
                b = 0
                for j in range(p):
                    b = b << 1 | (row >> placed[j] & 1)
                cands.append((b, v))
        cands.sort()
        for b, v in cands:
            if p and b > best[p - 1]:
                break
            if p and b < best[p - 1]:
                best[p - 1] = b
                for i in range(p, n - 1):
                    best[i] = _HUGE
            used[v] = True
            placed[p] = v
            extend(p + 1)
            used[v] = False

    extend(0)
    return tuple(best)


def _rows_from_bits(n: int, bits: tuple[int, ...]) -> tuple[int, ...]:
    rows = [0] * n
    for p in range(1, n):
        b = bits[p - 1]
        for j in range(p):
            if b >> (p - 1 - j) & 1:
                rows[p] |= 1 << j
                rows[j] |= 1 << p
    return tuple(rows)


@dataclass(frozen=True, order=True, slots=True)
class CanonicalForm:
    """Permutation-invariant adjacency encoding; equal iff isomorphic."""

    n: int
    bits: tuple[int, ...]

    def to_graph(self) -> Graph:
        rows = _rows_from_bits(self.n, self.bits)
        return Graph(self.n, rows, sum(r.bit_count() for r in rows) // 2)


def canonical_form(g: Graph) -> CanonicalForm:
    if g.n > CANON_MAX_N:
        raise ValueError(f"canonical form capped at n <= {CANON_MAX_N}, got n={g.n}")
    return CanonicalForm(g.n, _canonical_bits(g.n, g.rows))


def _check_scope(n: int, m: int) -> None:
    if n < 0 or m < 0 or m > n * (n - 1) // 2:
        raise ValueError(f"no graphs with n={n}, m={m}")
    if n > SCOPE_MAX_N:
        raise ValueError(f"generation capped at n <= {SCOPE_MAX_N}, got n={n}")
    if n == SCOPE_MAX_N and m > N9_MAX_M:
        raise ValueError(
            f"generation at n={SCOPE_MAX_N} capped at m <= {N9_MAX_M}, got m={m}"
        )


def _children_of_chunk(args: tuple[int, list[tuple[int, ...]]]) -> set[tuple[int, ...]]:
    """All canonical keys obtainable by adding one edge to any parent key."""
    n, chunk = args
    out: set[tuple[int, ...]] = set()
    for bits in chunk:
        rows = _rows_from_bits(n, bits)
        for u in range(n):
            for v in range(u + 1, n):
                if not rows[u] >> v & 1:
                    grown = list(rows)
                    grown[u] |= 1 << v
                    grown[v] |= 1 << u
                    out.add(_canonical_bits(n, tuple(grown)))
    return out


_level_cache: dict[tuple[int, int], tuple[tuple[int, ...], ...]] = {}


def _level(n: int, m: int, workers: int = 1) -> tuple[tuple[int, ...], ...]:
    """Sorted canonical keys of all isomorphism classes with n vertices,
    m edges."""
    key = (n, m)
    cached = _level_cache.get(key)
    if cached is not None:
        return cached
    if m == 0:
        result: tuple[tuple[int, ...], ...] = ((0,) * max(n - 1, 0),)
    else:
        parents = list(_level(n, m - 1, workers))
        if workers > 1 and len(parents) > 4 * workers:
            step = (len(parents) + 4 * workers - 1) // (4 * workers)
            chunks = [(n, parents[i : i + step]) for i in range(0, len(parents), step)]
            merged: set[tuple[int, ...]] = set()
            with ProcessPoolExecutor(max_workers=workers) as pool:
                for part in pool.map(_children_of_chunk, chunks):
                    merged |= part
        else:
            merged = _children_of_chunk((n, parents))
        result = tuple(sorted(merged))
    _level_cache[key] = result
    return result


def all_graphs(
    n: int, m: int, allow_disconnected: bool = True, workers: int = 1
) -> list[Graph]:
    """One canonical representative per isomorphism class of (n, m)-graphs,
    in ascending canonical order."""
    _check_scope(n, m)
    graphs = [CanonicalForm(n, bits).to_graph() for bits in _level(n, m, workers)]
    if not allow_disconnected:
        graphs = [g for g in graphs if is_connected(g)]
    return graphs


def connected_graphs(n: int, m: int, workers: int = 1) -> list[Graph]:
    return all_graphs(n, m, allow_disconnected=False, workers=workers)


INDEX_FUNCTIONS: dict[str, Callable[[Graph], float]] = {
    "so": sombor,
    "sored": reduced_sombor,
}


@dataclass(frozen=True, slots=True)
class ExtremalReport:
    """Outcome of a brute-force maximum search over one (n, nu) universe.

    ``max_degree_all_maximizers`` is the smallest maximum degree among the
    maximizers; it equals n-1 exactly when every maximizer has a
    dominating vertex.
    """

    n: int
    nu: int
    index: str
    universe_size: int
    max_value: float
    maximizers: tuple[Graph, ...]
    runner_up_gap: float
    unique: bool
    max_degree_all_maximizers: int


def extremal_search(
    n: int,
    nu: int,
    index: str | Callable[[int, int], float] = "so",
    workers: int = 1,
) -> ExtremalReport:
    """Exact maximum of an index over connected graphs with n vertices and
    cyclomatic number nu (edge count n-1+nu).

    ``index`` is "so", "sored", or a symmetric edge-term function of the
    two endpoint degrees.
    """
    if not 0 <= nu <= n - 2:
        raise ValueError(f"need 0 <= nu <= n-2, got nu={nu}, n={n}")
    m = n - 1 + nu
    _check_scope(n, m)
    if callable(index):
        term = index
        value_of = lambda g: edge_sum(g, term)  # noqa: E731
        label = getattr(index, "__name__", "custom")
    else:
        if index not in INDEX_FUNCTIONS:
            raise ValueError(f"unknown index {index!r} (one of {sorted(INDEX_FUNCTIONS)})")
        value_of = INDEX_FUNCTIONS[index]
        label = index
    universe = connected_graphs(n, m, workers=workers)
    if not universe:
        raise ValueError(f"empty universe for n={n}, nu={nu}")
    values = [value_of(g) for g in universe]
    max_value = max(values)
    tie_tol = VALUE_TIE_TOL * max(1.0, abs(max_value))
    maximizers = tuple(g for g, v in zip(universe, values) if v >= max_value - tie_tol)
    rest = [v for v in values if v < max_value - tie_tol]
    runner_up_gap = max_value - max(rest) if rest else float("inf")
    unique = len(maximizers) == 1
    if unique and runner_up_gap <= UNIQUENESS_GAP:
        raise AmbiguousMaximumError(
            f"n={n}, nu={nu}, index={label}: runner-up gap {runner_up_gap:.3e} "
            f"is below {UNIQUENESS_GAP:.0e}; refusing to claim a unique maximizer"
        )
    return ExtremalReport(
        n=n,
        nu=nu,
        index=label,
        universe_size=len(universe),
        max_value=max_value,
        maximizers=maximizers,
        runner_up_gap=runner_up_gap,
        unique=unique,
        max_degree_all_maximizers=min(max_degree(g) for g in maximizers),
    )
