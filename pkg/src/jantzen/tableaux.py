"""Standard tableaux of multipartitions, their residue data and KLR degrees."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from jantzen.combinat import (
    Multicharge,
    Multipartition,
    Node,
    content,
    d_node,
    dominates,
)


@dataclass(frozen=True)
class StandardTableau:
    """A standard filling of a multipartition: rows of entries per component.

    Entries increase along rows and down columns within each component, and
    every restriction to an initial segment of values has multipartition
    shape.
    """

    rows: tuple[tuple[tuple[int, ...], ...], ...]

    @property
    def size(self) -> int:
        return sum(len(r) for comp in self.rows for r in comp)

    def shape(self) -> Multipartition:
        return Multipartition(tuple(tuple(len(r) for r in comp) for comp in self.rows))

    def node_of(self, value: int) -> Node:
        for l, comp in enumerate(self.rows, start=1):
            for r, row in enumerate(comp, start=1):
                for c, entry in enumerate(row, start=1):
                    if entry == value:
                        return Node(l, r, c)
        raise ValueError(f"value {value} not in tableau")

    def entry(self, node: Node) -> int:
        return self.rows[node.l - 1][node.r - 1][node.c - 1]

    def nodes_in_order(self) -> tuple[Node, ...]:
        """The node containing k, for k = 1..size."""
        where = {}
        for l, comp in enumerate(self.rows, start=1):
            for r, row in enumerate(comp, start=1):
                for c, entry in enumerate(row, start=1):
                    where[entry] = Node(l, r, c)
        return tuple(where[k] for k in range(1, self.size + 1))

    def with_entry(self, node: Node, value: int) -> "StandardTableau":
        comps = [list(map(list, comp)) for comp in self.rows]
        l, r, c = node
        comp = comps[l - 1]
        if r == len(comp) + 1:
            comp.append([value])
        else:
            comp[r - 1].append(value)
        return StandardTableau(tuple(tuple(tuple(row) for row in comp) for comp in comps))

    def swap_values(self, a: int, b: int) -> "StandardTableau":
        comps = tuple(
            tuple(
                tuple(b if x == a else a if x == b else x for x in row) for row in comp
            )
            for comp in self.rows
        )
        return StandardTableau(comps)

    def is_standard(self) -> bool:
        for comp in self.rows:
            for r, row in enumerate(comp):
                for c, entry in enumerate(row):
                    if c + 1 < len(row) and row[c + 1] <= entry:
                        return False
                    if r + 1 < len(comp) and len(comp[r + 1]) > c and comp[r + 1][c] <= entry:
                        return False
        return True

    def to_lists(self) -> list[list[list[int]]]:
        return [[list(row) for row in comp] for comp in self.rows]

    @staticmethod
    def from_lists(lists) -> "StandardTableau":
        return StandardTableau(tuple(tuple(tuple(row) for row in comp) for comp in lists))

    def __repr__(self) -> str:
        comps = ["/".join(",".join(map(str, row)) for row in comp) for comp in self.rows]
        return f"StandardTableau({'|'.join(comps)})"


@lru_cache(maxsize=None)
def standard_tableaux(lam: Multipartition) -> tuple[StandardTableau, ...]:
    """All standard lam-tableaux; the row-reading tableau comes first.

    Depth-first removal of the largest entry from removable corners in
    descending lexicographic order; the first leaf of the recursion is the
    initial tableau and every restriction shape is produced along the way.
    """
    m = lam.size
    if m == 0:
        return (StandardTableau(tuple(() for _ in range(lam.level))),)
    out = []
    for corner in sorted(lam.removable_nodes(), reverse=True):
        for sub in standard_tableaux(lam.remove_node(corner)):
            out.append(sub.with_entry(corner, m))
    return tuple(out)


def initial_tableau(lam: Multipartition) -> StandardTableau:
    """The row-reading tableau t^lam, dominance-greatest in Std(lam)."""
    k = 0
    comps = []
    for comp in lam.components:
        rows = []
        for length in comp:
            rows.append(tuple(range(k + 1, k + length + 1)))
            k += length
        comps.append(tuple(rows))
    return StandardTableau(tuple(comps))


def content_sequence(t: StandardTableau, charge: Multicharge) -> tuple[int, ...]:
    return tuple(content(node, charge) for node in t.nodes_in_order())


def residue_sequence(t: StandardTableau, charge: Multicharge, f: int) -> tuple[int, ...]:
    if f < 2:
        raise ValueError("modulus must be >= 2")
    return tuple(c % f for c in content_sequence(t, charge))


def restriction_shapes(t: StandardTableau) -> tuple[Multipartition, ...]:
    """Shapes of t restricted to 1..k, for k = 1..size."""
    lam = t.shape()
    nodes = t.nodes_in_order()
    shapes = [None] * t.size
    cur = lam
    for k in range(t.size, 0, -1):
        shapes[k - 1] = cur
        cur = cur.remove_node(nodes[k - 1])
    return tuple(shapes)


def degree(t: StandardTableau, charge: Multicharge, f: int) -> int:
    """The KLR degree of a standard tableau at modulus f (0 for f = 0).

    Recursively deg(t restricted below the top entry) plus the signed count
    of addable-minus-removable nodes of the same residue after the top
    entry's node in lexicographic order.
    """
    if f == 0:
        return 0
    if f < 2:
        raise ValueError("modulus must be 0 or >= 2")
    total = 0
    for k, shape in enumerate(restriction_shapes(t), start=1):
        total += d_node(shape, t.nodes_in_order()[k - 1], f, charge)
    return total


def tableaux_by_residue(
    lam: Multipartition, charge: Multicharge, e: int
) -> dict[tuple[int, ...], list[StandardTableau]]:
    """Partition of Std(lam) into residue-sequence classes mod e."""
    out: dict[tuple[int, ...], list[StandardTableau]] = {}
    for t in standard_tableaux(lam):
        out.setdefault(residue_sequence(t, charge, e), []).append(t)
    return out


def dominance_compare(s: StandardTableau, t: StandardTableau) -> int:
    """1 if s strictly dominates t, -1 if t strictly dominates s, 0 otherwise."""
    if s == t:
        return 0
    ge = le = True
    for a, b in zip(restriction_shapes(s), restriction_shapes(t)):
        if not dominates(a, b):
            ge = False
        if not dominates(b, a):
            le = False
    if ge:
        return 1
    if le:
        return -1
    return 0


def down_transpositions(t: StandardTableau) -> Iterator[tuple[int, StandardTableau]]:
    """Pairs (r, t(r,r+1)) where the swap is standard and strictly less dominant."""
    for r in range(1, t.size):
        v = t.swap_values(r, r + 1)
        if v.is_standard() and dominance_compare(t, v) == 1:
            yield r, v
