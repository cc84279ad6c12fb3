"""Overfullness, the edge-deficiency budget, and the class-1/class-2 prediction.

All comparisons use exact integer arithmetic: a graph on n vertices is
overfull when edge_count > max_degree * floor(n/2), which forces chromatic
index max_degree + 1 because no color class can exceed floor(n/2) edges.
"""

from __future__ import annotations

from dataclasses import dataclass

from .groups import Group, factorize, is_cyclic
from .powergraph import Graph, core_subgraph, max_degree

__all__ = [
    "ClassPrediction",
    "CoreWitness",
    "GroupFacts",
    "OverfullReport",
    "core_class1_check",
    "deficiency_report",
    "is_overfull",
    "predict_class",
]


@dataclass(frozen=True)
class OverfullReport:
    n: int
    edge_count: int
    max_degree: int
    overfull: bool
    deficiency: int
    budget: int | None  # odd order only: most edges the graph may miss and stay overfull


@dataclass(frozen=True)
class GroupFacts:
    is_cyclic: bool
    odd: bool
    prime_power: bool


@dataclass(frozen=True)
class ClassPrediction:
    class_label: str  # "class1" | "class2"
    reason: str
    facts: GroupFacts


@dataclass(frozen=True)
class CoreWitness:
    condition: str  # "core-small" | "core-acyclic"
    core_size: int
    description: str


def is_overfull(graph: Graph) -> bool:
    """Exact integer test edge_count > max_degree * floor(n/2); false for n <= 1."""
    return graph.edge_count > max_degree(graph) * (graph.n // 2)


def deficiency_report(graph: Graph) -> OverfullReport:
    n = graph.n
    deficiency = n * (n - 1) // 2 - graph.edge_count
    budget = (n - 1) // 2 - 1 if n % 2 == 1 else None
    return OverfullReport(
        n=n,
        edge_count=graph.edge_count,
        max_degree=max_degree(graph),
        overfull=is_overfull(graph),
        deficiency=deficiency,
        budget=budget,
    )


def predict_class(group: Group) -> ClassPrediction:
    """Class 2 exactly for cyclic groups of odd prime-power order >= 3, else class 1."""
    n = group.order
    facts = GroupFacts(
        is_cyclic=is_cyclic(group),
        odd=n % 2 == 1,
        prime_power=factorize(n).is_prime_power,
    )
    if facts.is_cyclic and facts.odd and facts.prime_power and n >= 3:
        return ClassPrediction("class2", "odd-prime-power-cyclic-overfull", facts)
    if n == 1:
        # single-vertex graph: the core is one vertex and the chromatic index is 0
        return ClassPrediction("class1", "core-small", facts)
    if not facts.odd:
        return ClassPrediction("class1", "even-order", facts)
    return ClassPrediction("class1", "theorem-classification", facts)


def core_class1_check(graph: Graph) -> CoreWitness | None:
    """Sufficient class-1 conditions from the core (max-degree induced subgraph).

    Returns a witness when the core has at most two vertices or is acyclic.
    Absence of a witness is not evidence of class 2.
    """
    if graph.n < 1:
        return None
    core, _ = core_subgraph(graph)
    if core.n <= 2:
        noun = "vertex" if core.n == 1 else "vertices"
        return CoreWitness("core-small", core.n, f"core has {core.n} {noun}")
    if not _has_cycle(core):
        return CoreWitness("core-acyclic", core.n, f"core is acyclic ({core.n} vertices)")
    return None


def _has_cycle(graph: Graph) -> bool:
    seen = [False] * graph.n
    for root in range(graph.n):
        if seen[root]:
            continue
        stack = [(root, -1)]
        seen[root] = True
        while stack:
            v, parent = stack.pop()
            for w in graph.neighbors[v]:
                if not seen[w]:
                    seen[w] = True
                    stack.append((w, v))
                elif w != parent:
                    return True
    return False
