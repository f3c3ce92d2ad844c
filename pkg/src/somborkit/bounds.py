"""Checks for every proven bound and identity, on arbitrary graphs.

Each check produces a BoundReport.  Slack is oriented so that
``slack >= -tolerance`` is the uniform holds-test: rhs - lhs for upper
bounds, lhs - rhs for lower bounds.  Equality detection is two-stage:
numeric (|slack| within 1e-9 of scale) and then structural, against the
family proven to be the equality class.  A numeric equality without the
structural match is an anomaly and is never silently accepted.

Hypothesis notes.  The lower bounds assume no isolated edges (no K2
component); isolated vertices are permitted, so equality cases such as a
path plus an isolated vertex, or a disjoint union of cycles, are flagged
as anomalies on disconnected universes -- their edge structure attains the
bound but the graph is not a path or a cycle.  Censuses therefore run on
connected universes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Iterable

from .families import (
    all_edges_join_equal_degrees,
    every_edge_has_leaf_endpoint,
    is_cycle_graph,
    is_h_graph,
    is_path_graph,
    is_star_plus_isolated,
)
from .graphs import Graph, component_count, edge_stats, encode_graph6, is_connected
from .indices import first_zagreb, reduced_sombor, sombor, sombor_shifted

EQUALITY_TOL = 1e-9
STRICT_MARGIN = 1e-9

SO_LOWER_COEFF = (2 * math.sqrt(2) - math.sqrt(5)) / 3
SO_RED_LOWER_COEFF = math.sqrt(2) - 1


@dataclass(frozen=True, slots=True)
class BoundReport:
    bound_id: str
    graph6: str
    lhs: float
    rhs: float
    slack: float
    holds: bool
    equality: bool
    equality_class_match: bool
    vacuous: bool

    @property
    def violation(self) -> bool:
        return not self.vacuous and not self.holds

    @property
    def anomaly(self) -> bool:
        """Numeric equality on a characterized bound without the structural
        match."""
        return (
            not self.vacuous
            and self.equality
            and self.bound_id in CHARACTERIZED_BOUNDS
            and not self.equality_class_match
        )


def _report(
    bound_id: str,
    g: Graph,
    lhs: float,
    rhs: float,
    *,
    lower: bool = False,
    strict: bool = False,
    vacuous: bool = False,
    class_predicate: Callable[[Graph], bool] | None = None,
) -> BoundReport:
    slack = lhs - rhs if lower else rhs - lhs
    equality = not vacuous and abs(slack) <= EQUALITY_TOL * max(1.0, abs(rhs))
    if vacuous:
        holds = True
    elif strict:
        holds = slack > STRICT_MARGIN
    else:
        holds = slack >= -EQUALITY_TOL * max(1.0, abs(rhs))
    match = bool(equality and class_predicate is not None and class_predicate(g))
    return BoundReport(
        bound_id=bound_id,
        graph6=encode_graph6(g),
        lhs=lhs,
        rhs=rhs,
        slack=slack,
        holds=holds,
        equality=equality,
        equality_class_match=match,
        vacuous=vacuous,
    )


def check_so_shifted_upper(g: Graph) -> BoundReport:
    """sombor_shifted(G) <= m*sqrt((m+1)^2 + 4); equality exactly on a star
    with m edges plus isolated vertices."""
    m = g.m
    return _report(
        "so-shifted-upper",
        g,
        sombor_shifted(g),
        m * math.sqrt((m + 1) ** 2 + 4),
        class_predicate=is_star_plus_isolated,
    )


def check_so_red_upper(g: Graph) -> BoundReport:
    """reduced_sombor(G) <= m(m-1); equality exactly on a star with m edges
    plus isolated vertices."""
    m = g.m
    return _report(
        "so-red-upper",
        g,
        reduced_sombor(g),
        m * (m - 1),
        class_predicate=is_star_plus_isolated,
    )


def _is_star(g: Graph) -> bool:
    return is_connected(g) and is_star_plus_isolated(g)


def check_tree_corollary(g: Graph) -> BoundReport:
    """On trees: reduced_sombor(T) <= (n-1)(n-2), equality iff T is a star."""
    is_tree = is_connected(g) and g.m == g.n - 1
    return _report(
        "tree-so-red-upper",
        g,
        reduced_sombor(g),
        (g.n - 1) * (g.n - 2),
        vacuous=not is_tree,
        class_predicate=_is_star,
    )


def check_degree_sum_bound(g: Graph) -> BoundReport:
    """For graphs with a dominating vertex and cyclomatic number nu <= n-2:
    the sum of sqrt((n-1)^2 + d(v)^2) over the other vertices is at most
    (n-nu-2)sqrt((n-1)^2+1) + nu*sqrt((n-1)^2+4) + sqrt((n-1)^2+(nu+1)^2),
    with equality iff the graph is h_graph(n, nu)."""
    n = g.n
    deg = g.degrees()
    nu = g.m - n + component_count(g)
    dominating = n >= 1 and max(deg) == n - 1
    in_hypothesis = dominating and 0 <= nu <= n - 2
    hub = deg.index(max(deg)) if n >= 1 else 0
    a = n - 1
    lhs = sum(math.hypot(a, deg[v]) for v in range(n) if v != hub)
    rhs = (
        (n - nu - 2) * math.sqrt(a * a + 1)
        + nu * math.sqrt(a * a + 4)
        + math.sqrt(a * a + (nu + 1) ** 2)
    )
    return _report(
        "degree-sum-upper",
        g,
        lhs,
        rhs,
        vacuous=not in_hypothesis,
        class_predicate=is_h_graph,
    )


def check_epsilon_identities(g: Graph) -> list[BoundReport]:
    """Exact integer identities for the counts of edge-degree-1 and
    edge-degree-2 edges, valid whenever there is no isolated edge:

        e1 = 4m - M1 + sum_{i>=3} e_i (i-2)
        e2 = M1 - 3m - sum_{i>=3} e_i (i-1)
    """
    stats = edge_stats(g)
    vacuous = stats.isolated_edges > 0
    m = g.m
    m1 = first_zagreb(g)
    counts = stats.edge_degree_counts
    e1 = counts.get(1, 0)
    e2 = counts.get(2, 0)
    high_sum_2 = sum(c * (i - 2) for i, c in counts.items() if i >= 3)
    high_sum_1 = sum(c * (i - 1) for i, c in counts.items() if i >= 3)
    reports = []
    for bound_id, lhs, rhs in (
        ("epsilon1-identity", e1, 4 * m - m1 + high_sum_2),
        ("epsilon2-identity", e2, m1 - 3 * m - high_sum_1),
    ):
        slack = rhs - lhs
        holds = vacuous or slack == 0
        reports.append(
            BoundReport(
                bound_id=bound_id,
                graph6=encode_graph6(g),
                lhs=float(lhs),
                rhs=float(rhs),
                slack=float(slack),
                holds=holds,
                equality=not vacuous and slack == 0,
                equality_class_match=False,
                vacuous=vacuous,
            )
        )
    return reports


def _is_path_or_cycle(g: Graph) -> bool:
    return is_path_graph(g) or is_cycle_graph(g)


def check_so_lower_bound(g: Graph) -> BoundReport:
    """For graphs without isolated edges:
    sombor(G) >= (1/3)(2*sqrt2 - sqrt5)(3*M1 - 4m + 2*sqrt10*m),
    with equality iff G is a path or a cycle."""
    vacuous = edge_stats(g).isolated_edges > 0
    m = g.m
    rhs = SO_LOWER_COEFF * (3 * first_zagreb(g) - 4 * m + 2 * math.sqrt(10) * m)
    return _report(
        "so-lower",
        g,
        sombor(g),
        rhs,
        lower=True,
        vacuous=vacuous,
        class_predicate=_is_path_or_cycle,
    )


def check_so_red_lower_bound(g: Graph) -> BoundReport:
    """For graphs without isolated edges:
    reduced_sombor(G) >= (sqrt2 - 1)(M1 - 2m + sqrt2*m),
    with equality iff G is a path or a cycle."""
    vacuous = edge_stats(g).isolated_edges > 0
    m = g.m
    rhs = SO_RED_LOWER_COEFF * (first_zagreb(g) - 2 * m + math.sqrt(2) * m)
    return _report(
        "so-red-lower",
        g,
        reduced_sombor(g),
        rhs,
        lower=True,
        vacuous=vacuous,
        class_predicate=_is_path_or_cycle,
    )


def check_zagreb_sandwich(g: Graph) -> list[BoundReport]:
    """The four first-Zagreb comparisons, vacuous on edgeless graphs:

        M1 > SO               (strict; per-edge margin at least 2 - sqrt2)
        SO >= M1 / sqrt2      (equality iff every edge joins equal degrees)
        SO_red <= M1 - 2m     (equality iff every edge has a leaf endpoint)
        SO_red >= (M1-2m)/sqrt2  (equality iff every edge joins equal degrees)
    """
    vacuous = g.m == 0
    m1 = float(first_zagreb(g))
    so = sombor(g)
    so_red = reduced_sombor(g)
    reduced_cap = m1 - 2 * g.m
    return [
        _report("zagreb-so-upper", g, so, m1, strict=True, vacuous=vacuous),
        _report(
            "zagreb-so-lower",
            g,
            so,
            m1 / math.sqrt(2),
            lower=True,
            vacuous=vacuous,
            class_predicate=all_edges_join_equal_degrees,
        ),
        _report(
            "zagreb-so-red-upper",
            g,
            so_red,
            reduced_cap,
            vacuous=vacuous,
            class_predicate=every_edge_has_leaf_endpoint,
        ),
        _report(
            "zagreb-so-red-lower",
            g,
            so_red,
            reduced_cap / math.sqrt(2),
            lower=True,
            vacuous=vacuous,
            class_predicate=all_edges_join_equal_degrees,
        ),
    ]


BOUND_GROUPS: dict[str, Callable[[Graph], list[BoundReport]]] = {
    "so-shifted-upper": lambda g: [check_so_shifted_upper(g)],
    "so-red-upper": lambda g: [check_so_red_upper(g)],
    "tree-so-red-upper": lambda g: [check_tree_corollary(g)],
    "degree-sum-upper": lambda g: [check_degree_sum_bound(g)],
    "epsilon-identities": check_epsilon_identities,
    "so-lower": lambda g: [check_so_lower_bound(g)],
    "so-red-lower": lambda g: [check_so_red_lower_bound(g)],
    "zagreb-sandwich": check_zagreb_sandwich,
}

# bound_ids whose equality case has a proven structural characterization
CHARACTERIZED_BOUNDS = frozenset(
    {
        "so-shifted-upper",
        "so-red-upper",
        "tree-so-red-upper",
        "degree-sum-upper",
        "so-lower",
        "so-red-lower",
        "zagreb-so-lower",
        "zagreb-so-red-upper",
        "zagreb-so-red-lower",
    }
)


@dataclass(frozen=True, slots=True)
class SuiteSummary:
    graphs: int
    reports: int
    holds: int
    equality: int
    vacuous: int
    violations: tuple[BoundReport, ...]
    anomalies: tuple[BoundReport, ...]

    @property
    def ok(self) -> bool:
        return not self.violations and not self.anomalies


def run_suite(
    graphs: Iterable[Graph], bounds: Iterable[str] | None = None
) -> tuple[list[BoundReport], SuiteSummary]:
    """Evaluate the selected bound groups on every graph.

    ``bounds`` is a list of BOUND_GROUPS keys; None means all of them.
    Returns one report per (graph, emitted bound) plus the tallies.
    """
    if bounds is None:
        selected = list(BOUND_GROUPS)
    else:
        selected = list(bounds)
        unknown = [b for b in selected if b not in BOUND_GROUPS]
        if unknown:
            raise ValueError(
                f"unknown bound id(s) {unknown}; known: {sorted(BOUND_GROUPS)}"
            )
    reports: list[BoundReport] = []
    n_graphs = 0
    for g in graphs:
        n_graphs += 1
        for name in selected:
            reports.extend(BOUND_GROUPS[name](g))
    summary = SuiteSummary(
        graphs=n_graphs,
        reports=len(reports),
        holds=sum(r.holds and not r.vacuous for r in reports),
        equality=sum(r.equality for r in reports),
        vacuous=sum(r.vacuous for r in reports),
        violations=tuple(r for r in reports if r.violation),
        anomalies=tuple(r for r in reports if r.anomaly),
    )
    return reports, summary
