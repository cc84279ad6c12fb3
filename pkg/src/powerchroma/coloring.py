"""Edge colorings: verification, constructions, Kempe paths, and table/JSON IO.

Colors are 0-based internally and 1-based in every export, matching the usual
table presentation. Three constructions are provided:

* ``round_robin_coloring(n)`` - 1-factorization of K_n for even n (circle
  method: fix vertex n-1, rotate the rest), n-1 colors.
* ``rotation_classes(n)`` - for odd n, the n near-perfect matching classes
  S_p = {(p-q, p+q) mod n : q = 1..(n-1)/2} on labels 1..n; class p misses
  exactly the vertex labeled p.
* ``base_rotation_coloring(n)`` - K_n colored with classes S_1..S_{n-1} on
  n-1 colors, leaving the matching S_n uncolored.
"""

from __future__ import annotations

import csv
import io
import json
import re
from dataclasses import dataclass
from typing import Callable

from .powergraph import Edge, Graph, complete_graph, make_edge, display_vertex

__all__ = [
    "ColorConflict",
    "ColoringError",
    "EdgeColoring",
    "KempeCycleError",
    "KempePath",
    "VerificationReport",
    "base_rotation_coloring",
    "coloring_from_mapping",
    "coloring_to_csv",
    "coloring_to_json",
    "kempe_invert",
    "kempe_path",
    "parse_coloring_csv",
    "parse_coloring_json",
    "restrict_coloring",
    "rotation_classes",
    "round_robin_coloring",
    "verify_assignment",
    "verify_proper",
]


class ColoringError(ValueError):
    """Improper assignment or malformed coloring operation."""


class KempeCycleError(ColoringError):
    """The two-color component through the requested vertex is a cycle, not a path."""

    def __init__(self, vertices, colors):
        self.vertices = tuple(vertices)
        self.colors = tuple(colors)
        super().__init__(
            f"two-color component through vertex {self.vertices[0]} with colors "
            f"{self.colors} is a cycle"
        )


class EdgeColoring:
    """Partial proper edge coloring with O(1) per-vertex color lookups.

    ``assign`` refuses improper, out-of-palette, or off-graph moves, so every
    reachable state is proper by construction; ``verify_proper`` re-checks
    independently from the raw assignment.
    """

    __slots__ = ("graph", "palette_size", "_edge_color", "_at")

    def __init__(self, graph: Graph, palette_size: int):
        if palette_size < 0:
            raise ColoringError(f"palette size must be >= 0, got {palette_size}")
        self.graph = graph
        self.palette_size = palette_size
        self._edge_color: dict[Edge, int] = {}
        self._at: list[dict[int, int]] = [{} for _ in range(graph.n)]

    def copy(self) -> "EdgeColoring":
        out = EdgeColoring.__new__(EdgeColoring)
        out.graph = self.graph
        out.palette_size = self.palette_size
        out._edge_color = dict(self._edge_color)
        out._at = [dict(d) for d in self._at]
        return out

    def color_of(self, a: int, b: int) -> int | None:
        return self._edge_color.get(make_edge(a, b))

    def neighbor_at(self, v: int, color: int) -> int | None:
        """The neighbor joined to v by an edge of this color, if any."""
        return self._at[v].get(color)

    def colors_at(self, v: int) -> set[int]:
        return set(self._at[v])

    def missing_at(self, v: int) -> set[int]:
        return set(range(self.palette_size)) - self._at[v].keys()

    def assign(self, a: int, b: int, color: int) -> None:
        e = make_edge(a, b)
        if not self.graph.has_edge(a, b):
            raise ColoringError(f"edge {tuple(e)} is not in the graph")
        if not 0 <= color < self.palette_size:
            raise ColoringError(f"color {color} outside palette 0..{self.palette_size - 1}")
        if e in self._edge_color:
            raise ColoringError(f"edge {tuple(e)} already colored")
        for x in e:
            other = self._at[x].get(color)
            if other is not None:
                raise ColoringError(
                    f"color {color} already present at vertex {x} "
                    f"on edge {tuple(make_edge(x, other))}"
                )
        self._edge_color[e] = color
        self._at[e.u][color] = e.v
        self._at[e.v][color] = e.u

    def unassign(self, a: int, b: int) -> int:
        e = make_edge(a, b)
        if e not in self._edge_color:
            raise ColoringError(f"edge {tuple(e)} is not colored")
        color = self._edge_color.pop(e)
        del self._at[e.u][color]
        del self._at[e.v][color]
        return color

    def assignment(self) -> dict[Edge, int]:
        return dict(self._edge_color)

    def items(self):
        return self._edge_color.items()

    def __len__(self) -> int:
        return len(self._edge_color)

    def uncolored(self) -> list[Edge]:
        return sorted(self.graph.edge_set - self._edge_color.keys())

    def is_total(self) -> bool:
        return len(self._edge_color) == self.graph.edge_count

    def colors_used(self) -> int:
        return len(set(self._edge_color.values()))

    def swap_path_colors(self, vertices, a: int, b: int) -> None:
        """In-place a <-> b swap along consecutive colored edges of a path.

        Low level: callers must pass a maximal alternating path (or a full
        cycle with the first vertex repeated); properness is preserved then.
        """
        if len(vertices) < 2:
            return
        edges = [make_edge(x, y) for x, y in zip(vertices, vertices[1:])]
        olds = []
        for e in edges:
            color = self._edge_color[e]
            if color not in (a, b):
                raise ColoringError(f"edge {tuple(e)} carries color {color}, not {a} or {b}")
            olds.append(color)
        for e, c in zip(edges, olds):
            del self._edge_color[e]
            del self._at[e.u][c]
            del self._at[e.v][c]
        for e, c in zip(edges, olds):
            new = b if c == a else a
            self._edge_color[e] = new
            self._at[e.u][new] = e.v
            self._at[e.v][new] = e.u

    def __repr__(self) -> str:
        return (
            f"EdgeColoring(n={self.graph.n}, colored={len(self)}/"
            f"{self.graph.edge_count}, palette={self.palette_size})"
        )


@dataclass(frozen=True)
class ColorConflict:
    vertex: int
    color: int
    first: Edge
    second: Edge


@dataclass(frozen=True)
class VerificationReport:
    n: int
    palette_size: int
    colored_count: int
    distinct_colors: int
    conflicts: tuple[ColorConflict, ...]
    uncolored: tuple[Edge, ...]
    foreign_edges: tuple[Edge, ...]  # assigned edges absent from the graph
    out_of_palette: tuple[tuple[Edge, int], ...]

    @property
    def valid(self) -> bool:
        return not (self.conflicts or self.uncolored or self.foreign_edges or self.out_of_palette)

    def describe(self) -> str:
        if self.valid:
            return (
                f"valid: {self.colored_count} edges, {self.distinct_colors} colors "
                f"(palette {self.palette_size})"
            )
        parts = []
        for c in self.conflicts:
            parts.append(
                f"conflict at vertex {c.vertex}: color {c.color + 1} on edges "
                f"{tuple(c.first)} and {tuple(c.second)}"
            )
        if self.uncolored:
            parts.append(f"uncolored edges: {[tuple(e) for e in self.uncolored]}")
        if self.foreign_edges:
            parts.append(f"edges not in graph: {[tuple(e) for e in self.foreign_edges]}")
        if self.out_of_palette:
            parts.append(
                "out-of-palette: "
                + ", ".join(f"{tuple(e)} -> {c + 1}" for e, c in self.out_of_palette)
            )
        return "; ".join(parts)


def verify_assignment(graph: Graph, mapping: dict, palette_size: int) -> VerificationReport:
    """Independent properness check of a raw edge -> color mapping."""
    conflicts: list[ColorConflict] = []
    foreign: list[Edge] = []
    out_of_palette: list[tuple[Edge, int]] = []
    first_at: dict[tuple[int, int], Edge] = {}
    normalized: dict[Edge, int] = {}
    for key in sorted(make_edge(*k) for k in mapping):
        normalized[key] = mapping.get(key, mapping.get((key.v, key.u)))
    for e, color in normalized.items():
        if not (0 <= e.u < graph.n and 0 <= e.v < graph.n) or not graph.has_edge(e.u, e.v):
            foreign.append(e)
            continue
        if not 0 <= color < palette_size:
            out_of_palette.append((e, color))
        for x in e:
            prev = first_at.get((x, color))
            if prev is None:
                first_at[(x, color)] = e
            else:
                conflicts.append(ColorConflict(x, color, prev, e))
    foreign_set = set(foreign)
    colored = {e for e in normalized if e not in foreign_set}
    uncolored = tuple(sorted(graph.edge_set - colored))
    return VerificationReport(
        n=graph.n,
        palette_size=palette_size,
        colored_count=len(colored),
        distinct_colors=len({normalized[e] for e in colored}) if colored else 0,
        conflicts=tuple(conflicts),
        uncolored=uncolored,
        foreign_edges=tuple(foreign),
        out_of_palette=tuple(out_of_palette),
    )


def verify_proper(graph: Graph, coloring: EdgeColoring) -> VerificationReport:
    """Check a coloring against a graph; valid means total, proper, in palette."""
    return verify_assignment(graph, coloring.assignment(), coloring.palette_size)


def coloring_from_mapping(graph: Graph, mapping: dict, palette_size: int) -> EdgeColoring:
    """Strict construction from a mapping; raises ColoringError on any violation."""
    out = EdgeColoring(graph, palette_size)
    for (a, b), color in sorted((make_edge(*k), c) for k, c in mapping.items()):
        out.assign(a, b, color)
    return out


# ---------------------------------------------------------------------------
# constructions


def round_robin_coloring(n: int) -> EdgeColoring:
    """Total proper coloring of K_n (n even) with n-1 colors, each a perfect matching."""
    if n < 2 or n % 2 != 0:
        raise ValueError(f"round robin needs an even n >= 2, got {n}")
    graph = complete_graph(n)
    coloring = EdgeColoring(graph, n - 1)
    mod = n - 1
    for r in range(n - 1):
        coloring.assign(n - 1, r, r)
        for i in range(1, n // 2):
            coloring.assign((r + i) % mod, (r - i) % mod, r)
    return coloring


def rotation_classes(n: int) -> list[list[Edge]]:
    """The n near-perfect matching classes partitioning E(K_n) for odd n >= 3.

    Class index p-1 (p = 1..n) holds the edges (p-q, p+q) mod n over labels
    1..n for q = 1..(n-1)/2, translated to internal vertices (label n is
    vertex 0); it misses exactly the vertex labeled p.
    """
    if n < 3 or n % 2 == 0:
        raise ValueError(f"rotation classes need an odd n >= 3, got {n}")
    classes = []
    for p in range(1, n + 1):
        cls = [make_edge((p - q) % n, (p + q) % n) for q in range(1, (n - 1) // 2 + 1)]
        classes.append(sorted(cls))
    return classes


def base_rotation_coloring(n: int) -> tuple[EdgeColoring, tuple[Edge, ...]]:
    """K_n (odd) colored with classes 1..n-1; the last class is returned uncolored."""
    classes = rotation_classes(n)
    graph = complete_graph(n)
    coloring = EdgeColoring(graph, n - 1)
    for color, cls in enumerate(classes[:-1]):
        for u, v in cls:
            coloring.assign(u, v, color)
    return coloring, tuple(classes[-1])


def restrict_coloring(coloring: EdgeColoring, graph: Graph) -> EdgeColoring:
    """Restriction to a subgraph on the same vertex set."""
    if graph.n != coloring.graph.n:
        raise ColoringError("restriction target must have the same vertex set")
    out = EdgeColoring(graph, coloring.palette_size)
    for (u, v), color in sorted(coloring.items()):
        if graph.has_edge(u, v):
            out.assign(u, v, color)
    return out


# ---------------------------------------------------------------------------
# Kempe machinery


@dataclass(frozen=True)
class KempePath:
    """Maximal alternating path in two colors; a single vertex when neither occurs."""

    vertices: tuple[int, ...]
    colors: tuple[int, int]


def walk_alternating(
    neighbor_at: Callable[[int, int], int | None], v: int, first: int, second: int
) -> tuple[list[int], bool]:
    """Follow the alternating trail from v starting along `first`.

    Returns (vertices, closed); closed means the trail returned to v, i.e. the
    two-color component through v is a cycle. Each vertex has at most one edge
    per color, so the walk is forced.
    """
    seq = [v]
    cur, col = v, first
    while True:
        nxt = neighbor_at(cur, col)
        if nxt is None:
            return seq, False
        if nxt == v:
            return seq, True
        seq.append(nxt)
        cur = nxt
        col = second if col == first else first


def kempe_path(graph: Graph, coloring: EdgeColoring, v: int, a: int, b: int) -> KempePath:
    """Maximal alternating path from v in colors {a, b}, preferring a first.

    If v carries neither color the path is the single vertex v. If the
    component through v closes into a cycle, KempeCycleError is raised.
    """
    if a == b:
        raise ColoringError("kempe path needs two distinct colors")
    if coloring.graph is not graph and coloring.graph.edge_set != graph.edge_set:
        raise ColoringError("coloring does not belong to this graph")
    if not 0 <= v < graph.n:
        raise ColoringError(f"vertex {v} out of range")
    for c in (a, b):
        if not 0 <= c < coloring.palette_size:
            raise ColoringError(f"color {c} outside palette 0..{coloring.palette_size - 1}")
    if coloring.neighbor_at(v, a) is not None:
        first, second = a, b
    elif coloring.neighbor_at(v, b) is not None:
        first, second = b, a
    else:
        return KempePath((v,), (a, b))
    vertices, closed = walk_alternating(coloring.neighbor_at, v, first, second)
    if closed:
        raise KempeCycleError(vertices, (a, b))
    return KempePath(tuple(vertices), (a, b))


def kempe_invert(coloring: EdgeColoring, path: KempePath) -> EdgeColoring:
    """Swap the two colors along a maximal alternating path; returns a new coloring.

    Non-maximal paths are rejected: inverting one would create a conflict at
    the truncation point.
    """
    a, b = path.colors
    verts = path.vertices
    if len(set(verts)) != len(verts):
        raise ColoringError("kempe path repeats a vertex")
    out = coloring.copy()
    if len(verts) == 1:
        return out
    cols = []
    for x, y in zip(verts, verts[1:]):
        color = coloring.color_of(x, y)
        if color is None:
            raise ColoringError(f"path step ({x}, {y}) is not a colored edge")
        if color not in (a, b):
            raise ColoringError(f"path edge ({x}, {y}) has color {color}, not in {{{a}, {b}}}")
        if cols and color == cols[-1]:
            raise ColoringError("path colors do not alternate")
        cols.append(color)
    for endpoint, edge_color in ((verts[0], cols[0]), (verts[-1], cols[-1])):
        extend = b if edge_color == a else a
        if coloring.neighbor_at(endpoint, extend) is not None:
            raise ColoringError(
                f"path is not maximal: vertex {endpoint} still has color {extend}"
            )
    out.swap_path_colors(list(verts), a, b)
    return out


# ---------------------------------------------------------------------------
# table and JSON IO

_EDGE_CELL = re.compile(r"^\(\s*(\d+)\s*,\s*(\d+)\s*\)$")


def _display_pair(e: Edge, n: int) -> tuple[int, int]:
    return tuple(sorted((display_vertex(e.u, n), display_vertex(e.v, n))))


def coloring_to_csv(coloring: EdgeColoring) -> str:
    """Table layout: header of 1-based colors, columns of "(u, v)" cells in 1..n labels."""
    n = coloring.graph.n
    columns: list[list[str]] = [[] for _ in range(coloring.palette_size)]
    by_color: dict[int, list[tuple[int, int]]] = {}
    for e, c in coloring.items():
        by_color.setdefault(c, []).append(_display_pair(e, n))
    for c, pairs in by_color.items():
        columns[c] = [f"({u}, {v})" for u, v in sorted(pairs)]
    height = max((len(col) for col in columns), default=0)
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow([str(c + 1) for c in range(coloring.palette_size)])
    for r in range(height):
        writer.writerow([col[r] if r < len(col) else "" for col in columns])
    return buf.getvalue()


def parse_coloring_csv(text: str, n: int) -> tuple[int, dict[Edge, int]]:
    """Parse a table back into (palette_size, internal edge -> 0-based color)."""
    reader = csv.reader(io.StringIO(text))
    try:
        header = next(reader)
    except StopIteration:
        raise ColoringError("empty coloring table") from None
    try:
        colors = [int(h) for h in header if h.strip()]
    except ValueError as exc:
        raise ColoringError(f"bad header row {header!r}") from exc
    if colors != list(range(1, len(colors) + 1)):
        raise ColoringError(f"header must count colors 1..k, got {colors}")
    palette = len(colors)
    mapping: dict[Edge, int] = {}
    for row in reader:
        for idx, cell in enumerate(row):
            cell = cell.strip()
            if not cell:
                continue
            if idx >= palette:
                raise ColoringError(f"cell {cell!r} beyond declared palette")
            m = _EDGE_CELL.match(cell)
            if not m:
                raise ColoringError(f"cannot parse edge cell {cell!r}")
            u_label, v_label = int(m.group(1)), int(m.group(2))
            if not (1 <= u_label <= n and 1 <= v_label <= n):
                raise ColoringError(f"edge cell {cell!r} out of range for n={n}")
            e = make_edge(u_label % n, v_label % n)
            if e in mapping:
                raise ColoringError(f"edge {cell!r} listed twice")
            mapping[e] = idx
    return palette, mapping


def coloring_to_json(coloring: EdgeColoring) -> str:
    payload = {
        "n": coloring.graph.n,
        "palette": coloring.palette_size,
        "edges": [
            {"u": e.u, "v": e.v, "color": c + 1} for e, c in sorted(coloring.items())
        ],
    }
    return json.dumps(payload, indent=2, sort_keys=True)


def parse_coloring_json(text: str) -> tuple[int, int, dict[Edge, int]]:
    """Parse the flat JSON form into (n, palette_size, internal edge -> 0-based color)."""
    payload = json.loads(text)
    n = int(payload["n"])
    palette = int(payload["palette"])
    mapping: dict[Edge, int] = {}
    for item in payload["edges"]:
        e = make_edge(int(item["u"]), int(item["v"]))
        if e in mapping:
            raise ColoringError(f"edge {tuple(e)} listed twice")
        mapping[e] = int(item["color"]) - 1
    return n, palette, mapping
