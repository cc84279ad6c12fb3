"""Simple undirected graphs, the power-graph construction, and structural queries.

Vertices are 0..n-1. Adjacency is kept both as sorted neighbor tuples and as
one bitmask per vertex so edge tests are O(1); everything is immutable after
construction.
"""

from __future__ import annotations

import json
from typing import Iterable, NamedTuple

from .groups import Group

__all__ = [
    "Edge",
    "Graph",
    "build_power_graph",
    "complement_edges",
    "complete_graph",
    "core_subgraph",
    "full_degree_vertices",
    "graph_from_json",
    "graph_to_dot",
    "graph_to_json",
    "internal_vertex",
    "make_edge",
    "max_degree",
    "display_vertex",
]


class Edge(NamedTuple):
    """Canonical unordered vertex pair with u < v."""

    u: int
    v: int


def make_edge(a: int, b: int) -> Edge:
    if a == b:
        raise ValueError(f"loop edge ({a}, {b}) is not allowed")
    return Edge(a, b) if a < b else Edge(b, a)


class Graph:
    """Immutable simple graph with sorted neighbor sets and per-vertex bitmasks."""

    __slots__ = ("n", "neighbors", "bits", "edge_count", "labels", "_edge_set")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]], labels=None):
        if n < 0:
            raise ValueError(f"vertex count must be >= 0, got {n}")
        canonical = set()
        for a, b in edges:
            e = make_edge(a, b)
            if not 0 <= e.u < n or not 0 <= e.v < n:
                raise ValueError(f"edge {e} out of range for n={n}")
            canonical.add(e)
        adj: list[list[int]] = [[] for _ in range(n)]
        bits = [0] * n
        for u, v in canonical:
            adj[u].append(v)
            adj[v].append(u)
            bits[u] |= 1 << v
            bits[v] |= 1 << u
        self.n = n
        self.neighbors = tuple(tuple(sorted(a)) for a in adj)
        self.bits = tuple(bits)
        self.edge_count = len(canonical)
        if labels is None:
            self.labels = tuple(str(i) for i in range(n))
        else:
            self.labels = tuple(str(s) for s in labels)
            if len(self.labels) != n:
                raise ValueError("labels length does not match vertex count")
        self._edge_set: frozenset[Edge] | None = None

    def has_edge(self, a: int, b: int) -> bool:
        return bool(self.bits[a] >> b & 1)

    def degree(self, v: int) -> int:
        return len(self.neighbors[v])

    def edges(self) -> list[Edge]:
        return sorted(make_edge(u, v) for u in range(self.n) for v in self.neighbors[u] if u < v)

    @property
    def edge_set(self) -> frozenset[Edge]:
        if self._edge_set is None:
            self._edge_set = frozenset(
                make_edge(u, v) for u in range(self.n) for v in self.neighbors[u] if u < v
            )
        return self._edge_set

    def induced(self, vertices: Iterable[int]) -> tuple["Graph", tuple[int, ...]]:
        """Induced subgraph plus the map from new indices back to parent vertices."""
        parents = tuple(sorted(set(vertices)))
        back = {p: i for i, p in enumerate(parents)}
        edges = [
            (back[u], back[v])
            for u in parents
            for v in self.neighbors[u]
            if v in back and u < v
        ]
        labels = [self.labels[p] for p in parents]
        return Graph(len(parents), edges, labels), parents

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edge_count})"


def complete_graph(n: int, labels=None) -> Graph:
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)], labels)


def build_power_graph(group: Group) -> Graph:
    """Power graph of a group: a ~ b iff one is a power of the other (a != b)."""
    n = group.order
    edges = set()
    for b in range(n):
        for a in group.powers_of(b):
            if a != b:
                edges.add(make_edge(a, b))
    return Graph(n, edges, group.element_names)


def max_degree(graph: Graph) -> int:
    if graph.n == 0:
        return 0
    return max(graph.degree(v) for v in range(graph.n))


def full_degree_vertices(graph: Graph) -> tuple[int, ...]:
    """All vertices adjacent to every other vertex (needs n >= 2)."""
    if graph.n < 2:
        raise ValueError(f"full_degree_vertices needs n >= 2, got n={graph.n}")
    return tuple(v for v in range(graph.n) if graph.degree(v) == graph.n - 1)


def core_subgraph(graph: Graph) -> tuple[Graph, tuple[int, ...]]:
    """Subgraph induced by the maximum-degree vertices, with the parent map."""
    if graph.n < 1:
        raise ValueError("core_subgraph needs n >= 1")
    top = max_degree(graph)
    return graph.induced(v for v in range(graph.n) if graph.degree(v) == top)


def complement_edges(graph: Graph) -> list[Edge]:
    """All non-edges relative to the complete graph on the same vertices, sorted."""
    return [
        Edge(u, v)
        for u in range(graph.n)
        for v in range(u + 1, graph.n)
        if not graph.has_edge(u, v)
    ]


def display_vertex(v: int, n: int) -> int:
    """Internal vertex index to 1..n display label (identity 0 prints as n)."""
    return v if v >= 1 else n


def internal_vertex(label: int, n: int) -> int:
    """1..n display label back to the internal 0..n-1 index."""
    if not 1 <= label <= n:
        raise ValueError(f"vertex label {label} out of range 1..{n}")
    return label % n


def graph_to_json(graph: Graph) -> str:
    payload = {
        "n": graph.n,
        "edges": [[u, v] for u, v in graph.edges()],
        "labels": list(graph.labels),
    }
    return json.dumps(payload, indent=2, sort_keys=True)


def graph_from_json(text: str) -> Graph:
    payload = json.loads(text)
    return Graph(payload["n"], [tuple(e) for e in payload["edges"]], payload.get("labels"))


def graph_to_dot(graph: Graph, coloring=None, display_labels: bool = False) -> str:
    """DOT rendering with vertex labels and optional 1-based edge color labels."""
    lines = ["graph powergraph {"]
    for v in range(graph.n):
        label = str(display_vertex(v, graph.n)) if display_labels else graph.labels[v]
        lines.append(f'  n{v} [label="{label}"];')
    for u, v in graph.edges():
        attr = ""
        if coloring is not None:
            color = coloring.color_of(u, v)
            if color is not None:
                attr = f' [label="{color + 1}"]'
        lines.append(f"  n{u} -- n{v}{attr};")
    lines.append("}")
    return "\n".join(lines) + "\n"
