"""Edge-exchange engine and the per-group coloring dispatcher.

``exchange_coloring`` turns the rotation base coloring of K_n (odd n, n-1
colors, one near-perfect matching left out) into a total (n-1)-coloring of a
target subgraph with a full-degree vertex. Edges the base colors but the
target lacks are traded one-for-one against target edges the base misses;
each trade is realized by at most one Kempe path inversion. The working graph
keeps a constant number of colored edges until the final surplus deletion, so
every color class stays a near-perfect matching throughout.

The trade schedule escalates: direct recolor, depth-1 Kempe exchange over all
color pairs, bounded sacrifice chains (temporarily removing target edges, as
deeper conflicts require), seeded random scrambles, and finally deeper chains
under a node budget. Failure is reported with diagnostics and proves nothing
about the target's chromatic index.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from . import oracle
from .coloring import (
    ColoringError,
    EdgeColoring,
    base_rotation_coloring,
    restrict_coloring,
    rotation_classes,
    round_robin_coloring,
    walk_alternating,
)
from .groups import Group
from .overfull import ClassPrediction, OverfullReport, deficiency_report, predict_class
from .powergraph import Edge, Graph, build_power_graph, make_edge, max_degree

__all__ = [
    "ExchangeFailure",
    "ExchangeState",
    "ExchangeStepError",
    "GroupColoring",
    "STRATEGIES",
    "color_power_graph",
    "exchange_coloring",
    "exchange_edge",
]


class ExchangeStepError(RuntimeError):
    """A single exchange step could not be realized at depth 1."""


class ExchangeFailure(RuntimeError):
    """The exchange schedule exhausted its budget; carries diagnostics."""

    def __init__(self, remaining_extra, remaining_missing, stats):
        self.remaining_extra = tuple(remaining_extra)
        self.remaining_missing = tuple(remaining_missing)
        self.stats = dict(stats)
        super().__init__(
            f"exchange schedule exhausted: {len(self.remaining_extra)} extra and "
            f"{len(self.remaining_missing)} missing edges left"
        )


class ExchangeState:
    """Mutable working coloring over a shifting edge set.

    ``extra`` holds colored edges absent from the target; ``missing`` holds
    target edges not currently in the working graph. Inversions and exchanges
    keep the coloring proper; |extra| - |missing| is invariant.
    """

    __slots__ = ("n", "palette", "target", "edge_color", "at", "extra", "missing", "stats")

    def __init__(self, target: Graph):
        n = target.n
        if n < 3 or n % 2 == 0:
            raise ValueError(f"exchange transform needs odd order >= 3, got n={n}")
        base, _ = base_rotation_coloring(n)
        self.n = n
        self.palette = n - 1
        self.target = target.edge_set
        self.edge_color: dict[Edge, int] = dict(base.assignment())
        self.at: list[dict[int, int]] = [{} for _ in range(n)]
        for e, c in self.edge_color.items():
            self.at[e.u][c] = e.v
            self.at[e.v][c] = e.u
        self.extra = {e for e in self.edge_color if e not in self.target}
        self.missing = {e for e in self.target if e not in self.edge_color}
        self.stats = {
            "attempts": 0,
            "exchanges": 0,
            "direct": 0,
            "inversions": 0,
            "chain_calls": 0,
            "restores": 0,
            "scrambles": 0,
        }

    def neighbor_at(self, v: int, color: int) -> int | None:
        return self.at[v].get(color)

    def missing_colors(self, v: int) -> set[int]:
        return set(range(self.palette)) - self.at[v].keys()

    def remove_edge(self, e: Edge) -> int:
        color = self.edge_color.pop(e)
        del self.at[e.u][color]
        del self.at[e.v][color]
        if e in self.target:
            self.missing.add(e)
        else:
            self.extra.discard(e)
        return color

    def add_edge(self, e: Edge, color: int) -> None:
        if e in self.edge_color:
            raise ColoringError(f"edge {tuple(e)} already in the working graph")
        if color in self.at[e.u] or color in self.at[e.v]:
            raise ColoringError(f"color {color} clashes at an endpoint of {tuple(e)}")
        self.edge_color[e] = color
        self.at[e.u][color] = e.v
        self.at[e.v][color] = e.u
        if e in self.target:
            self.missing.discard(e)
        else:
            self.extra.add(e)

    def invert_path(self, vertices: list[int], a: int, b: int) -> None:
        """Swap colors a <-> b along consecutive edges of an open alternating path."""
        edges = [make_edge(x, y) for x, y in zip(vertices, vertices[1:])]
        olds = [self.edge_color[e] for e in edges]
        for e, c in zip(edges, olds):
            del self.edge_color[e]
            del self.at[e.u][c]
            del self.at[e.v][c]
        for e, c in zip(edges, olds):
            new = b if c == a else a
            self.edge_color[e] = new
            self.at[e.u][new] = e.v
            self.at[e.v][new] = e.u
        self.stats["inversions"] += 1

    def invert_cycle(self, vertices: list[int], a: int, b: int) -> None:
        """Swap colors around a closed alternating cycle (wraps last -> first)."""
        self.invert_path(vertices + [vertices[0]], a, b)

    def scramble(self, rng: random.Random, steps: int) -> None:
        """Random maximal two-color component inversions; properness is preserved."""
        for _ in range(steps):
            v = rng.randrange(self.n)
            a, b = rng.sample(range(self.palette), 2)
            has_a = a in self.at[v]
            has_b = b in self.at[v]
            if not has_a and not has_b:
                continue
            if has_a and has_b:
                verts, closed = walk_alternating(self.neighbor_at, v, a, b)
                if closed:
                    self.invert_cycle(verts, a, b)
                    continue
                # v is interior to a path: restart from the far end for maximality
                end = verts[-1]
                start = a if a in self.at[end] else b
                other = b if start == a else a
                verts, _ = walk_alternating(self.neighbor_at, end, start, other)
                self.invert_path(verts, a, b)
            else:
                first = a if has_a else b
                second = b if has_a else a
                verts, _ = walk_alternating(self.neighbor_at, v, first, second)
                self.invert_path(verts, a, b)
        self.stats["scrambles"] += 1

    def snapshot(self):
        return (
            dict(self.edge_color),
            [dict(d) for d in self.at],
            set(self.extra),
            set(self.missing),
        )

    def restore(self, snap) -> None:
        edge_color, at, extra, missing = snap
        self.edge_color = dict(edge_color)
        self.at = [dict(d) for d in at]
        self.extra = set(extra)
        self.missing = set(missing)
        self.stats["restores"] += 1

    def to_coloring(self, target: Graph) -> EdgeColoring:
        out = EdgeColoring(target, self.palette)
        for e, c in sorted(self.edge_color.items()):
            out.assign(e.u, e.v, c)
        return out


def _attempt_exchange(state: ExchangeState, remove: Edge, add: Edge) -> bool:
    """Trade one colored edge for one absent edge; at most one Kempe inversion.

    On success the state is updated; on failure it is left exactly as found.
    """
    state.stats["attempts"] += 1
    x = state.remove_edge(remove)
    u, v = add
    missing_u = state.missing_colors(u)
    missing_v = state.missing_colors(v)
    shared = missing_u & missing_v
    if shared:
        state.add_edge(add, min(shared))
        state.stats["direct"] += 1
        state.stats["exchanges"] += 1
        return True
    for alpha in sorted(missing_u):
        for beta in sorted(missing_v):
            # make v miss alpha: walk from v along alpha, alternating beta
            verts, closed = walk_alternating(state.neighbor_at, v, alpha, beta)
            if not closed and verts[-1] != u:
                state.invert_path(verts, alpha, beta)
                state.add_edge(add, alpha)
                state.stats["exchanges"] += 1
                return True
            # or make u miss beta: walk from u along beta, alternating alpha
            verts, closed = walk_alternating(state.neighbor_at, u, beta, alpha)
            if not closed and verts[-1] != v:
                state.invert_path(verts, beta, alpha)
                state.add_edge(add, beta)
                state.stats["exchanges"] += 1
                return True
    state.add_edge(remove, x)
    return False


def exchange_edge(state: ExchangeState, remove: Edge, add: Edge) -> ExchangeState:
    """Public single exchange step; raises ExchangeStepError when not realizable.

    ``remove`` must currently be colored and ``add`` absent from the working
    graph. The step succeeds when the endpoints of ``add`` share a missing
    color after the deletion, directly or after one Kempe path inversion.
    """
    remove = make_edge(*remove)
    add = make_edge(*add)
    if remove not in state.edge_color:
        raise ExchangeStepError(f"remove edge {tuple(remove)} is not colored")
    if add in state.edge_color:
        raise ExchangeStepError(f"add edge {tuple(add)} is already present")
    if remove == add:
        raise ExchangeStepError("remove and add must differ")
    if not _attempt_exchange(state, remove, add):
        raise ExchangeStepError(
            f"no depth-1 exchange realizes removing {tuple(remove)} for {tuple(add)}"
        )
    return state


@dataclass
class _Limits:
    node_budget: int
    nodes: int = 0
    banned: set = field(default_factory=set)

    def spend(self) -> bool:
        self.nodes += 1
        return self.nodes <= self.node_budget


def _sacrifice_candidates(state: ExchangeState, t: Edge, limits: _Limits) -> list[Edge]:
    out: list[Edge] = []
    seen = set()
    for w in t:
        for color in sorted(state.at[w]):
            e = make_edge(w, state.at[w][color])
            if e == t or e in seen or e in state.extra or e in limits.banned:
                continue
            seen.add(e)
            out.append(e)
    return out


def _try_add(state: ExchangeState, t: Edge, depth: int, limits: _Limits) -> bool:
    """Bring target edge t into the working graph, sacrificing up to `depth` edges."""
    state.stats["chain_calls"] += 1
    if not limits.spend():
        return False
    for r in sorted(state.extra):
        if _attempt_exchange(state, r, t):
            return True
    if depth <= 0:
        return False
    for r in _sacrifice_candidates(state, t, limits):
        snap = state.snapshot()
        if not _attempt_exchange(state, r, t):
            continue
        limits.banned.add(t)
        ok = _try_add(state, r, depth - 1, limits)
        limits.banned.discard(t)
        if ok:
            return True
        state.restore(snap)
    return False


def _drain(state: ExchangeState, depth: int, limits: _Limits) -> bool:
    while state.missing:
        for t in sorted(state.missing):
            if _try_add(state, t, depth, limits):
                break
        else:
            return False
    return True


def exchange_coloring(
    target: Graph,
    n: int | None = None,
    *,
    seed: int = 0,
    chain_depth: int = 3,
    restart_limit: int = 12,
    deep_depth: int = 5,
    node_budget: int = 200_000,
) -> EdgeColoring:
    """Total (n-1)-edge-coloring of an odd-order target with a full-degree vertex.

    The target must not be overfull (edge_count <= (n-1) * floor(n/2)); an
    overfull target cannot be colored in n-1 colors at all. Deterministic for
    a fixed seed. Raises ExchangeFailure when the whole escalation ladder is
    exhausted, which proves nothing about the target.
    """
    if n is None:
        n = target.n
    if n != target.n:
        raise ValueError(f"declared order {n} does not match the target ({target.n})")
    if n < 3 or n % 2 == 0:
        raise ValueError(f"exchange transform needs odd order >= 3, got n={n}")
    if max_degree(target) != n - 1:
        raise ValueError("target must contain a vertex adjacent to all others")
    if target.edge_count > (n - 1) * (n // 2):
        raise ValueError(
            f"target with {target.edge_count} edges is overfull; "
            f"no {n - 1}-coloring exists"
        )

    state = ExchangeState(target)
    if not _drain(state, chain_depth, _Limits(node_budget)):
        rng = random.Random(seed)
        done = False
        for _ in range(restart_limit):
            state.scramble(rng, 2 * n)
            if _drain(state, chain_depth, _Limits(node_budget)):
                done = True
                break
        if not done:
            fresh = ExchangeState(target)
            if _drain(fresh, deep_depth, _Limits(4 * node_budget)):
                state = fresh
                done = True
        if not done:
            raise ExchangeFailure(sorted(state.extra), sorted(state.missing), state.stats)
    for e in sorted(state.extra):
        state.remove_edge(e)
    return state.to_coloring(target)


# ---------------------------------------------------------------------------
# per-group dispatch

STRATEGIES = ("auto", "roundrobin", "sp", "rhee", "exact")


@dataclass
class GroupColoring:
    """A coloring of a group's power graph together with how it was obtained."""

    label: str
    graph: Graph
    coloring: EdgeColoring
    class_label: str  # "class1" | "class2" | "indeterminate"
    strategy: str
    colors_used: int
    prediction: ClassPrediction
    certificate: OverfullReport | None
    stats: dict


def color_power_graph(
    group: Group,
    *,
    strategy: str = "auto",
    seed: int = 0,
    oracle_budget: int = oracle.DEFAULT_NODE_BUDGET,
) -> GroupColoring:
    """Color the power graph with max_degree colors when class 1, one more when class 2.

    Dispatch for "auto": even order restricts the K_n round robin; odd cyclic
    prime-power order gets the full rotation scheme plus an overfull
    certificate; everything else goes through the exchange transform, with
    exact search as the fallback. The result always passes verification by
    construction.
    """
    if strategy not in STRATEGIES:
        raise ValueError(f"unknown strategy {strategy!r}; expected one of {STRATEGIES}")
    graph = build_power_graph(group)
    prediction = predict_class(group)
    n = group.order

    if strategy == "auto":
        if n == 1:
            return GroupColoring(
                group.label, graph, EdgeColoring(graph, 0), "class1", "trivial",
                0, prediction, None, {},
            )
        if n % 2 == 0:
            return _color_round_robin(group, graph, prediction)
        if prediction.class_label == "class2":
            return _color_rotation(group, graph, prediction)
        try:
            coloring = exchange_coloring(graph, seed=seed)
            return GroupColoring(
                group.label, graph, coloring, "class1", "rhee",
                coloring.colors_used(), prediction, None, {},
            )
        except ExchangeFailure as failure:
            result = _color_exact(group, graph, prediction, oracle_budget)
            result.stats["exchange_failure"] = {
                "remaining_extra": len(failure.remaining_extra),
                "remaining_missing": len(failure.remaining_missing),
            }
            return result
    if strategy == "roundrobin":
        if n % 2 != 0:
            raise ValueError("roundrobin strategy needs an even group order")
        return _color_round_robin(group, graph, prediction)
    if strategy == "sp":
        if n % 2 == 0 or n < 3:
            raise ValueError("sp strategy needs an odd group order >= 3")
        return _color_rotation(group, graph, prediction)
    if strategy == "rhee":
        coloring = exchange_coloring(graph, seed=seed)
        return GroupColoring(
            group.label, graph, coloring, "class1", "rhee",
            coloring.colors_used(), prediction, None, {},
        )
    return _color_exact(group, graph, prediction, oracle_budget)


def _color_round_robin(group: Group, graph: Graph, prediction: ClassPrediction) -> GroupColoring:
    n = group.order
    coloring = restrict_coloring(round_robin_coloring(n), graph)
    return GroupColoring(
        group.label, graph, coloring, "class1", "roundrobin",
        coloring.colors_used(), prediction, None, {},
    )


def _color_rotation(group: Group, graph: Graph, prediction: ClassPrediction) -> GroupColoring:
    n = group.order
    coloring = EdgeColoring(graph, n)
    for color, cls in enumerate(rotation_classes(n)):
        for u, v in cls:
            if graph.has_edge(u, v):
                coloring.assign(u, v, color)
    certificate = deficiency_report(graph) if prediction.class_label == "class2" else None
    return GroupColoring(
        group.label, graph, coloring, prediction.class_label, "sp",
        coloring.colors_used(), prediction, certificate, {},
    )


def _color_exact(
    group: Group, graph: Graph, prediction: ClassPrediction, budget: int
) -> GroupColoring:
    delta = max_degree(graph)
    result = oracle.is_k_edge_colorable(graph, delta, budget)
    if result.status == "yes":
        return GroupColoring(
            group.label, graph, result.witness, "class1", "exact",
            result.witness.colors_used(), prediction, None,
            {"oracle_nodes": result.nodes_explored},
        )
    if result.status == "no":
        witness = oracle.misra_gries_coloring(graph)
        report = deficiency_report(graph)
        certificate = report if report.overfull else None
        return GroupColoring(
            group.label, graph, witness, "class2", "exact",
            witness.colors_used(), prediction, certificate,
            {"oracle_nodes": result.nodes_explored},
        )
    witness = oracle.misra_gries_coloring(graph)
    return GroupColoring(
        group.label, graph, witness, "indeterminate", "exact",
        witness.colors_used(), prediction, None,
        {"oracle_nodes": result.nodes_explored, "budget_exhausted": True},
    )
