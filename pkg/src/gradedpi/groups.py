"""Finite groups represented extensionally by Cayley tables.

Elements are indices ``0..k-1`` with display labels.  Constructors verify
the group axioms exhaustively, which stays cheap for the supported order
cap (default 64).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from .errors import GroupAxiomError

DEFAULT_ORDER_CAP = 64


@dataclass(frozen=True)
class GroupTable:
    """A finite group: labels, Cayley table, identity, inverses and orders."""

    labels: tuple[str, ...]
    table: tuple[tuple[int, ...], ...]
    identity: int
    inverse: tuple[int, ...]
    elt_order: tuple[int, ...]

    @property
    def order(self) -> int:
        return len(self.labels)

    def elements(self) -> range:
        return range(self.order)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self.inverse[a]

    def power(self, a: int, k: int) -> int:
        if k < 0:
            return self.power(self.inv(a), -k)
        acc = self.identity
        for _ in range(k):
            acc = self.mul(acc, a)
        return acc

    def product(self, seq) -> int:
        acc = self.identity
        for a in seq:
            acc = self.mul(acc, a)
        return acc

    def label(self, i: int) -> str:
        return self.labels[i]

    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise GroupAxiomError(f"unknown group element label {label!r}") from None

    def is_abelian(self) -> bool:
        k = self.order
        return all(self.table[a][b] == self.table[b][a] for a in range(k) for b in range(k))

    def __repr__(self):
        return f"GroupTable(order={self.order}, labels={list(self.labels)})"


def _element_orders(table, identity) -> tuple[int, ...]:
    orders = []
    for g in range(len(table)):
        t, x = 1, g
        while x != identity:
            x = table[x][g]
            t += 1
        orders.append(t)
    return tuple(orders)


def group_from_table(labels, table, max_order: int = DEFAULT_ORDER_CAP) -> GroupTable:
    """Build a verified GroupTable from labels and a Cayley table.

    Raises GroupAxiomError naming the violating entry or triple when the
    table is not a group.
    """
    labels = tuple(str(x) for x in labels)
    k = len(labels)
    if k == 0:
        raise GroupAxiomError("a group needs at least one element")
    if k > max_order:
        raise GroupAxiomError(f"group order {k} exceeds the configured cap {max_order}")
    if len(set(labels)) != k:
        raise GroupAxiomError("duplicate element labels")
    if len(table) != k or any(len(row) != k for row in table):
        raise GroupAxiomError(f"Cayley table must be {k}x{k}")
    table = tuple(tuple(int(v) for v in row) for row in table)
    for i, row in enumerate(table):
        for j, v in enumerate(row):
            if not 0 <= v < k:
                raise GroupAxiomError(f"table entry ({i},{j}) = {v} out of range")

    identity = None
    for e in range(k):
        if all(table[e][x] == x == table[x][e] for x in range(k)):
            identity = e
            break
    if identity is None:
        raise GroupAxiomError("no two-sided identity element")

    inverse = []
    for a in range(k):
        found = None
        for b in range(k):
            if table[a][b] == identity == table[b][a]:
                found = b
                break
        if found is None:
            raise GroupAxiomError(f"no inverse for element {a} ({labels[a]!r})")
        inverse.append(found)

    for a in range(k):
        for b in range(k):
            for c in range(k):
                if table[table[a][b]][c] != table[a][table[b][c]]:
                    raise GroupAxiomError(
                        f"associativity fails at triple ({a},{b},{c}): "
                        f"({labels[a]}*{labels[b]})*{labels[c]} != {labels[a]}*({labels[b]}*{labels[c]})"
                    )

    return GroupTable(labels, table, identity, tuple(inverse), _element_orders(table, identity))


def cyclic_group(n: int, max_order: int = DEFAULT_ORDER_CAP) -> GroupTable:
    """The cyclic group Z_n with element i labeled ``"i"``."""
    if n < 1:
        raise GroupAxiomError(f"cyclic group order must be >= 1, got {n}")
    labels = [str(i) for i in range(n)]
    table = [[(i + j) % n for j in range(n)] for i in range(n)]
    return group_from_table(labels, table, max_order=max_order)


def trivial_group() -> GroupTable:
    return cyclic_group(1)


def symmetric_group(n: int, max_order: int = DEFAULT_ORDER_CAP) -> GroupTable:
    """The symmetric group S_n; elements are labeled by one-line notation."""
    if n < 1:
        raise GroupAxiomError(f"symmetric group degree must be >= 1, got {n}")
    perms = sorted(permutations(range(1, n + 1)))
    pos = {p: i for i, p in enumerate(perms)}
    labels = ["".join(str(v) for v in p) for p in perms]

    def compose(p, q):
        # (p*q)(i) = p(q(i)), matching left-to-right Cayley products
        return tuple(p[q[i] - 1] for i in range(n))

    table = [[pos[compose(p, q)] for q in perms] for p in perms]
    return group_from_table(labels, table, max_order=max_order)
