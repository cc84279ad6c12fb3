"""Bundled reference data: coloring tables and a sample group table file.

Three coloring tables for the order-15 cyclic group's power graph ship with
the package: a hand-assembled total 14-coloring, the rotation base table of
K_15 (14 colors, one near-perfect matching uncolored), and the base table
after one documented exchange step. A 21-element nonabelian group table
rounds out the test catalog.
"""

from __future__ import annotations

from importlib import resources

from .coloring import parse_coloring_csv
from .groups import Group, load_table_text
from .powergraph import Edge

__all__ = [
    "c15_reference_coloring",
    "c15_reference_csv",
    "k15_base_csv",
    "k15_base_table",
    "k15_exchanged_csv",
    "k15_exchanged_table",
    "nonabelian21_group",
    "nonabelian21_text",
]


def _read(name: str) -> str:
    return (resources.files("powerchroma") / "fixtures" / name).read_text(encoding="utf-8")


def c15_reference_csv() -> str:
    return _read("c15_reference_14_coloring.csv")


def k15_base_csv() -> str:
    return _read("k15_rotation_base.csv")


def k15_exchanged_csv() -> str:
    return _read("k15_rotation_exchanged.csv")


def c15_reference_coloring() -> tuple[int, dict[Edge, int]]:
    """The shipped total 14-coloring of the order-15 cyclic power graph."""
    return parse_coloring_csv(c15_reference_csv(), 15)


def k15_base_table() -> tuple[int, dict[Edge, int]]:
    """The rotation base table of K_15: 98 colored edges, one matching left out."""
    return parse_coloring_csv(k15_base_csv(), 15)


def k15_exchanged_table() -> tuple[int, dict[Edge, int]]:
    """The base table after removing one edge and adding a traded one."""
    return parse_coloring_csv(k15_exchanged_csv(), 15)


def nonabelian21_text() -> str:
    return _read("nonabelian_order21.table")


def nonabelian21_group() -> Group:
    return load_table_text(nonabelian21_text(), "table:nonabelian_order21")
