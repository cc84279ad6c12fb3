"""Shared test helpers: independent brute-force oracles kept separate from the library."""

from __future__ import annotations

import math
import random

import pytest

from powerchroma import Graph, Group, make_edge


def brute_is_power(group: Group, a: int, b: int) -> bool:
    """a == b^k for some k >= 0, by explicit repeated multiplication."""
    x = 0
    for _ in range(group.order + 1):
        if x == a:
            return True
        x = group.table[x][b]
    return False


def brute_power_graph_edges(group: Group) -> set:
    """Power-graph edge set computed directly from the multiplication table."""
    n = group.order
    return {
        make_edge(a, b)
        for a in range(n)
        for b in range(a + 1, n)
        if brute_is_power(group, a, b) or brute_is_power(group, b, a)
    }


def brute_phi(n: int) -> int:
    return sum(1 for k in range(1, n + 1) if math.gcd(k, n) == 1)


def random_graph(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph(n, edges)


def random_bipartite(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    left = rng.randrange(1, n)
    edges = [(u, v) for u in range(left) for v in range(left, n) if rng.random() < p]
    return Graph(n, edges)


@pytest.fixture
def rng() -> random.Random:
    return random.Random(0xC0FFEE)
