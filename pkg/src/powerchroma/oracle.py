"""Exact small-instance ground truth for edge colorings.

``is_k_edge_colorable`` runs a budgeted backtracking search over edges in
descending degree-sum order; colors are interchangeable, so every edge at one
chosen maximum-degree vertex is pinned to a fixed color up front, removing the
k! relabeling factor. A counting shortcut answers "no" immediately whenever
edge_count > k * floor(n/2), since no color class can exceed floor(n/2) edges.

``exact_chromatic_index`` only ever tests k = max_degree: by the
Vizing-Gupta bound any graph needs either max_degree or max_degree + 1
colors, and a (max_degree + 1)-witness always exists, produced here by the
Misra-Gries fan-rotation construction.
"""

from __future__ import annotations

from dataclasses import dataclass

from .coloring import EdgeColoring, walk_alternating
from .powergraph import Graph, max_degree

__all__ = [
    "ColorabilityResult",
    "DEFAULT_NODE_BUDGET",
    "OracleResult",
    "exact_chromatic_index",
    "is_k_edge_colorable",
    "misra_gries_coloring",
]

DEFAULT_NODE_BUDGET = 10_000_000


@dataclass(frozen=True)
class ColorabilityResult:
    status: str  # "yes" | "no" | "indeterminate"
    witness: EdgeColoring | None
    nodes_explored: int


@dataclass(frozen=True)
class OracleResult:
    chromatic_index: int | None
    witness: EdgeColoring | None
    nodes_explored: int
    budget_exhausted: bool

    @property
    def determinate(self) -> bool:
        return self.chromatic_index is not None


def is_k_edge_colorable(
    graph: Graph, k: int, budget: int = DEFAULT_NODE_BUDGET
) -> ColorabilityResult:
    if k < 0:
        raise ValueError(f"color count must be >= 0, got {k}")
    if graph.edge_count == 0:
        return ColorabilityResult("yes", EdgeColoring(graph, k), 0)
    if max_degree(graph) > k:
        return ColorabilityResult("no", None, 0)
    if graph.edge_count > k * (graph.n // 2):
        return ColorabilityResult("no", None, 0)

    degrees = [graph.degree(v) for v in range(graph.n)]
    order = sorted(graph.edges(), key=lambda e: (-(degrees[e.u] + degrees[e.v]), e))
    top = max(degrees)
    pivot = min(v for v in range(graph.n) if degrees[v] == top)
    forced: dict = {}
    for e in order:
        if pivot in e:
            forced[e] = len(forced)

    full = (1 << k) - 1
    used = [0] * graph.n
    m = len(order)
    choice = [-1] * m
    nodes = 0
    i = 0
    while True:
        e = order[i]
        u, v = e
        start = choice[i] + 1
        if e in forced:
            c = forced[e]
            picked = c if c >= start and not ((used[u] | used[v]) >> c & 1) else -1
        else:
            avail = ~(used[u] | used[v]) & full & ~((1 << start) - 1)
            picked = (avail & -avail).bit_length() - 1 if avail else -1
        nodes += 1
        if nodes > budget:
            return ColorabilityResult("indeterminate", None, nodes)
        if picked < 0:
            choice[i] = -1
            i -= 1
            if i < 0:
                return ColorabilityResult("no", None, nodes)
            prev = order[i]
            bit = 1 << choice[i]
            used[prev.u] &= ~bit
            used[prev.v] &= ~bit
            continue
        choice[i] = picked
        bit = 1 << picked
        used[u] |= bit
        used[v] |= bit
        i += 1
        if i == m:
            witness = EdgeColoring(graph, k)
            for e, c in zip(order, choice):
                witness.assign(e.u, e.v, c)
            return ColorabilityResult("yes", witness, nodes)


def exact_chromatic_index(graph: Graph, budget: int = DEFAULT_NODE_BUDGET) -> OracleResult:
    delta = max_degree(graph)
    if graph.edge_count == 0:
        return OracleResult(0, EdgeColoring(graph, 0), 0, False)
    result = is_k_edge_colorable(graph, delta, budget)
    if result.status == "yes":
        return OracleResult(delta, result.witness, result.nodes_explored, False)
    if result.status == "no":
        return OracleResult(delta + 1, misra_gries_coloring(graph), result.nodes_explored, False)
    return OracleResult(None, None, result.nodes_explored, True)


def misra_gries_coloring(graph: Graph) -> EdgeColoring:
    """Proper edge coloring with at most max_degree + 1 colors via fan rotations."""
    delta = max_degree(graph)
    coloring = EdgeColoring(graph, delta + 1 if graph.edge_count else 0)
    for u, v in graph.edges():
        _mg_color_edge(coloring, u, v)
    return coloring


def _mg_color_edge(coloring: EdgeColoring, u: int, v: int) -> None:
    graph = coloring.graph
    # maximal fan of u starting at v: each next edge's color is free at the
    # previous fan vertex
    fan = [v]
    in_fan = {v}
    while True:
        free_last = coloring.missing_at(fan[-1])
        nxt = None
        for w in graph.neighbors[u]:
            if w in in_fan:
                continue
            cw = coloring.color_of(u, w)
            if cw is not None and cw in free_last:
                nxt = w
                break
        if nxt is None:
            break
        fan.append(nxt)
        in_fan.add(nxt)

    c = min(coloring.missing_at(u))
    d = min(coloring.missing_at(fan[-1]))
    if d not in coloring.missing_at(u):
        # flip the maximal c/d path out of u so that d becomes free at u
        verts, closed = walk_alternating(coloring.neighbor_at, u, d, c)
        assert not closed, "c is free at u, so u cannot lie on a c/d cycle"
        coloring.swap_path_colors(verts, c, d)

    # rotate the shortest fan prefix ending at a vertex where d is now free
    # and whose fan property survived the inversion
    w_index = None
    for i, w in enumerate(fan):
        if d not in coloring.missing_at(w):
            continue
        if _is_fan(coloring, u, fan[: i + 1]):
            w_index = i
            break
    assert w_index is not None, "fan rotation target must exist"
    prefix = fan[: w_index + 1]
    shifted = [coloring.color_of(u, x) for x in prefix[1:]]
    for x in prefix[1:]:
        coloring.unassign(u, x)
    for x, color in zip(prefix, shifted):
        coloring.assign(u, x, color)
    coloring.assign(u, prefix[-1], d)


def _is_fan(coloring: EdgeColoring, u: int, fan: list[int]) -> bool:
    for prev, cur in zip(fan, fan[1:]):
        color = coloring.color_of(u, cur)
        if color is None or color not in coloring.missing_at(prev):
            return False
    return True
