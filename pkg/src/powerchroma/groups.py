"""Finite groups as explicit multiplication tables.

Groups are built from family specs (cyclic, dihedral, generalized quaternion,
direct products) or loaded from table files. Element 0 is always the identity.
Element orders and cyclic-subgroup membership are cached at construction,
since the power-graph build queries them repeatedly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path

__all__ = [
    "Factorization",
    "Group",
    "GroupSpecError",
    "GroupTableError",
    "construct_group",
    "cyclic_group",
    "dihedral_group",
    "direct_product",
    "element_order",
    "euler_phi",
    "factorize",
    "is_cyclic",
    "is_power_of",
    "load_table_file",
    "load_table_text",
    "quaternion_group",
    "validate_table",
]


class GroupSpecError(ValueError):
    """Malformed or unsupported group spec string."""


class GroupTableError(ValueError):
    """Multiplication table violates the group axioms."""


@dataclass(frozen=True)
class Factorization:
    """Prime factorization as (prime, exponent) pairs, primes strictly increasing."""

    factors: tuple[tuple[int, int], ...]

    def __iter__(self):
        return iter(self.factors)

    def __len__(self) -> int:
        return len(self.factors)

    @property
    def value(self) -> int:
        out = 1
        for prime, exponent in self.factors:
            out *= prime**exponent
        return out

    @property
    def is_prime_power(self) -> bool:
        """True for p^k with k >= 1; 1 factors to the empty product and is not one."""
        return len(self.factors) == 1


def factorize(n: int) -> Factorization:
    """Trial-division factorization of n >= 1 (1 yields the empty product)."""
    if n < 1:
        raise ValueError(f"factorize({n}): expected n >= 1")
    factors: list[tuple[int, int]] = []
    rest = n
    p = 2
    while p * p <= rest:
        if rest % p == 0:
            exp = 0
            while rest % p == 0:
                rest //= p
                exp += 1
            factors.append((p, exp))
        p += 1 if p == 2 else 2
    if rest > 1:
        factors.append((rest, 1))
    return Factorization(tuple(factors))


def euler_phi(n: int) -> int:
    """Count of 1 <= k <= n coprime to n, computed from the factorization."""
    if n < 1:
        raise ValueError(f"euler_phi({n}): expected n >= 1")
    out = 1
    for prime, exponent in factorize(n):
        out *= (prime - 1) * prime ** (exponent - 1)
    return out


def validate_table(table: tuple[tuple[int, ...], ...]) -> None:
    """Check the full group axioms: Latin square, identity at 0, associativity, inverses.

    Associativity is verified exactly, using the row identity
    a*(b*c) = (a*b)*c  <=>  row_a composed with row_b equals row_{a*b}.
    """
    n = len(table)
    if n == 0:
        raise GroupTableError("empty multiplication table")
    for i, row in enumerate(table):
        if len(row) != n:
            raise GroupTableError(f"row {i} has length {len(row)}, expected {n}")
        for x in row:
            if not isinstance(x, int) or not 0 <= x < n:
                raise GroupTableError(f"entry {x!r} in row {i} out of range 0..{n - 1}")
        if len(set(row)) != n:
            raise GroupTableError(f"row {i} is not a permutation (Latin square violated)")
    for j in range(n):
        col = {table[i][j] for i in range(n)}
        if len(col) != n:
            raise GroupTableError(f"column {j} is not a permutation (Latin square violated)")
    for j in range(n):
        if table[0][j] != j:
            raise GroupTableError("element 0 is not a left identity")
        if table[j][0] != j:
            raise GroupTableError("element 0 is not a right identity")
    for a in range(n):
        row_a = table[a]
        for b in range(n):
            row_b = table[b]
            if [row_a[x] for x in row_b] != list(table[row_a[b]]):
                raise GroupTableError(f"associativity fails at a={a}, b={b}")
    for a in range(n):
        b = table[a].index(0)
        if table[b][a] != 0:
            raise GroupTableError(f"element {a} has no two-sided inverse")


class Group:
    """Finite group on element indices 0..n-1 with the identity at index 0.

    The table is validated on construction; ``element_orders[g]`` is the order
    of g and ``powers_of(g)`` the cyclic subgroup it generates (as a frozenset
    of element indices, always containing the identity).
    """

    __slots__ = ("order", "table", "element_orders", "label", "element_names", "_powers")

    def __init__(self, table, label: str, element_names=None):
        rows = tuple(tuple(int(x) for x in row) for row in table)
        validate_table(rows)
        self.order = len(rows)
        self.table = rows
        self.label = label
        if element_names is None:
            names = tuple(f"g{i}" for i in range(self.order))
        else:
            names = tuple(str(s) for s in element_names)
            if len(names) != self.order:
                raise ValueError("element_names length does not match group order")
        self.element_names = names

        orders = []
        powers = []
        for g in range(self.order):
            closure = {0}
            x = g
            k = 1
            while x != 0:
                closure.add(x)
                x = rows[x][g]
                k += 1
            orders.append(k)
            powers.append(frozenset(closure))
        self.element_orders = tuple(orders)
        self._powers = tuple(powers)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inverse(self, a: int) -> int:
        return self.table[a].index(0)

    def powers_of(self, g: int) -> frozenset[int]:
        """The cyclic subgroup generated by g, as a set of element indices."""
        if not 0 <= g < self.order:
            raise IndexError(f"element index {g} out of range 0..{self.order - 1}")
        return self._powers[g]

    def __repr__(self) -> str:
        return f"Group({self.label!r}, order={self.order})"


def element_order(group: Group, g: int) -> int:
    """Smallest k >= 1 with g^k equal to the identity."""
    if not 0 <= g < group.order:
        raise IndexError(f"element index {g} out of range 0..{group.order - 1}")
    return group.element_orders[g]


def is_power_of(group: Group, a: int, b: int) -> bool:
    """True iff a lies in the cyclic subgroup generated by b (k = 0 included)."""
    if not 0 <= a < group.order:
        raise IndexError(f"element index {a} out of range 0..{group.order - 1}")
    return a in group.powers_of(b)


def is_cyclic(group: Group) -> bool:
    """True iff some element has order equal to the group order."""
    return group.order in group.element_orders


def cyclic_group(n: int) -> Group:
    """Cyclic group of order n, element i standing for the i-th generator power."""
    if n < 1:
        raise GroupSpecError(f"cyclic:{n}: order must be >= 1")
    table = [[(i + j) % n for j in range(n)] for i in range(n)]
    names = ["e"] + ["c" if i == 1 else f"c^{i}" for i in range(1, n)]
    return Group(table, f"cyclic:{n}", names)


def dihedral_group(n: int) -> Group:
    """Dihedral group of order 2n (n >= 3): rotations r^i and reflections r^i s."""
    if n < 3:
        raise GroupSpecError(f"dihedral:{n}: need n >= 3 (order 2n)")

    def idx(i: int, j: int) -> int:
        return i + n * j

    table = [[0] * (2 * n) for _ in range(2 * n)]
    for i in range(n):
        for j in range(2):
            for k in range(n):
                for ell in range(2):
                    rot = (i + k) % n if j == 0 else (i - k) % n
                    table[idx(i, j)][idx(k, ell)] = idx(rot, (j + ell) % 2)
    names = ["e"] + ["r" if i == 1 else f"r^{i}" for i in range(1, n)]
    names += ["s"] + ["r s" if i == 1 else f"r^{i} s" for i in range(1, n)]
    return Group(table, f"dihedral:{n}", names)


def quaternion_group(m: int) -> Group:
    """Generalized quaternion (dicyclic) group of order 4m (m >= 2).

    Presentation a^(2m) = e, b^2 = a^m, b a b^-1 = a^-1; elements a^i b^j.
    """
    if m < 2:
        raise GroupSpecError(f"quaternion:{m}: need m >= 2 (order 4m)")
    two_m = 2 * m

    def idx(i: int, j: int) -> int:
        return i + two_m * j

    table = [[0] * (4 * m) for _ in range(4 * m)]
    for i in range(two_m):
        for j in range(2):
            for k in range(two_m):
                for ell in range(2):
                    if j == 0:
                        table[idx(i, j)][idx(k, ell)] = idx((i + k) % two_m, ell)
                    elif ell == 0:
                        table[idx(i, j)][idx(k, ell)] = idx((i - k) % two_m, 1)
                    else:
                        table[idx(i, j)][idx(k, ell)] = idx((i - k + m) % two_m, 0)
    names = ["e"] + ["a" if i == 1 else f"a^{i}" for i in range(1, two_m)]
    names += ["b"] + ["a b" if i == 1 else f"a^{i} b" for i in range(1, two_m)]
    return Group(table, f"quaternion:{m}", names)


def direct_product(*groups: Group) -> Group:
    """Direct product with mixed-radix element indexing; identity stays at 0."""
    if len(groups) < 2:
        raise ValueError("direct_product needs at least two factors")
    sizes = [g.order for g in groups]
    n = math.prod(sizes)

    def decode(x: int) -> tuple[int, ...]:
        parts = []
        for size in reversed(sizes):
            x, r = divmod(x, size)
            parts.append(r)
        return tuple(reversed(parts))

    def encode(parts) -> int:
        x = 0
        for size, p in zip(sizes, parts):
            x = x * size + p
        return x

    table = [[0] * n for _ in range(n)]
    for a in range(n):
        pa = decode(a)
        for b in range(n):
            pb = decode(b)
            table[a][b] = encode(g.table[x][y] for g, x, y in zip(groups, pa, pb))
    label = "product:" + ",".join(g.label for g in groups)
    names = [
        "(" + ",".join(g.element_names[x] for g, x in zip(groups, decode(a))) + ")"
        for a in range(n)
    ]
    return Group(table, label, names)


def load_table_text(text: str, label: str = "table:<text>") -> Group:
    """Parse a table file body: first value n, then n rows of n indices.

    Blank lines and lines starting with '#' are ignored.
    """
    tokens: list[str] = []
    for line in text.splitlines():
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        tokens.extend(stripped.split())
    if not tokens:
        raise GroupTableError("table file is empty")
    try:
        n = int(tokens[0])
    except ValueError as exc:
        raise GroupTableError(f"first value must be the order, got {tokens[0]!r}") from exc
    if n < 1:
        raise GroupTableError(f"order must be >= 1, got {n}")
    body = tokens[1:]
    if len(body) != n * n:
        raise GroupTableError(f"expected {n * n} table entries, found {len(body)}")
    try:
        values = [int(t) for t in body]
    except ValueError as exc:
        raise GroupTableError("table entries must be integers") from exc
    rows = [values[i * n : (i + 1) * n] for i in range(n)]
    return Group(rows, label)


def load_table_file(path: str | Path) -> Group:
    path = Path(path)
    return load_table_text(path.read_text(encoding="utf-8"), f"table:{path}")


def construct_group(spec: str) -> Group:
    """Build a group from a spec string.

    Grammar: ``cyclic:n`` (n >= 1), ``dihedral:n`` (order 2n, n >= 3),
    ``quaternion:m`` (order 4m, m >= 2), ``product:<spec>,<spec>[,...]``
    with non-product factors, or ``table:<file>``.
    """
    text = spec.strip()
    head, sep, rest = text.partition(":")
    head = head.strip().lower()
    if not sep or not rest.strip():
        raise GroupSpecError(f"malformed group spec {spec!r}")
    rest = rest.strip()
    if head == "cyclic":
        return cyclic_group(_parse_int(rest, spec))
    if head == "dihedral":
        return dihedral_group(_parse_int(rest, spec))
    if head == "quaternion":
        return quaternion_group(_parse_int(rest, spec))
    if head == "product":
        parts = [p.strip() for p in rest.split(",")]
        if len(parts) < 2:
            raise GroupSpecError(f"product spec needs at least two factors: {spec!r}")
        for part in parts:
            if part.lower().startswith("product"):
                raise GroupSpecError(
                    f"nested products are not supported; flatten the factor list: {spec!r}"
                )
        return direct_product(*(construct_group(p) for p in parts))
    if head == "table":
        return load_table_file(rest)
    raise GroupSpecError(f"unknown group family {head!r} in spec {spec!r}")


def _parse_int(text: str, spec: str) -> int:
    try:
        return int(text)
    except ValueError as exc:
        raise GroupSpecError(f"expected an integer parameter in {spec!r}") from exc
