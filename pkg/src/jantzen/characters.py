"""Graded formal characters: maps from residue sequences to Laurent polynomials.

The graded character of a Specht module records q^{deg(t)} at the residue
sequence of every standard tableau t.  Evaluating at q = 1 gives the ungraded
character; the derivative-at-one operator and the residue-reduction map
between moduli are the two linear operations the sum formulas need.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Mapping

from jantzen.combinat import Multicharge, Multipartition, residue
from jantzen.ring import LaurentPoly
from jantzen.tableaux import degree, residue_sequence, standard_tableaux

ResidueSeq = tuple[int, ...]


@dataclass(frozen=True)
class CharacterVector:
    """A finitely supported map residue sequence -> Laurent polynomial, mod f."""

    f: int
    entries: tuple[tuple[ResidueSeq, LaurentPoly], ...]

    @staticmethod
    def build(f: int, data: Mapping[ResidueSeq, LaurentPoly]) -> "CharacterVector":
        items = tuple(
            (tuple(k), v) for k, v in sorted(data.items()) if not v.is_zero()
        )
        return CharacterVector(f, items)

    def as_dict(self) -> dict[ResidueSeq, LaurentPoly]:
        return dict(self.entries)

    def is_zero(self) -> bool:
        return not self.entries

    def coeff(self, i: ResidueSeq) -> LaurentPoly:
        return dict(self.entries).get(tuple(i), LaurentPoly.zero())

    def __add__(self, other: "CharacterVector") -> "CharacterVector":
        if self.f != other.f:
            raise ValueError("modulus mismatch")
        out = self.as_dict()
        for k, v in other.entries:
            out[k] = out.get(k, LaurentPoly.zero()) + v
        return CharacterVector.build(self.f, out)

    def __sub__(self, other: "CharacterVector") -> "CharacterVector":
        return self + other.scale(LaurentPoly({0: -1}))

    def scale(self, c: LaurentPoly | int) -> "CharacterVector":
        if isinstance(c, int):
            c = LaurentPoly({0: c})
        return CharacterVector.build(self.f, {k: v * c for k, v in self.entries})

    def bar(self) -> "CharacterVector":
        return CharacterVector.build(self.f, {k: v.bar() for k, v in self.entries})

    def partial(self) -> "CharacterVector":
        """Entrywise derivative at q = 1, as a constant-valued character."""
        return CharacterVector.build(
            self.f,
            {k: LaurentPoly({0: v.derivative_at_one()}) for k, v in self.entries},
        )

    def ungraded(self) -> dict[ResidueSeq, int]:
        """Evaluation at q = 1."""
        out = {k: v.eval_at_one() for k, v in self.entries}
        return {k: v for k, v in out.items() if v}

    def int_entries(self) -> dict[ResidueSeq, int]:
        """Entries of an integer-valued (constant) character."""
        out = {}
        for k, v in self.entries:
            if v.support() not in ([], [0]):
                raise ValueError("character is not integer-valued")
            out[k] = v.coeff(0)
        return out

    # -- serialization ------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "f": self.f,
            "entries": [[list(k), v.to_pairs()] for k, v in self.entries],
        }

    @staticmethod
    def from_json(data: dict) -> "CharacterVector":
        return CharacterVector.build(
            int(data["f"]),
            {
                tuple(int(x) for x in k): LaurentPoly.from_pairs(pairs)
                for k, pairs in data["entries"]
            },
        )


def graded_specht_character(
    lam: Multipartition, charge: Multicharge, f: int
) -> CharacterVector:
    """Ch_q of the graded Specht module: sum of q^{deg(t)} at res_f(t)."""
    if f < 2:
        raise ValueError("modulus must be >= 2")
    data: dict[ResidueSeq, LaurentPoly] = {}
    for t in standard_tableaux(lam):
        i = residue_sequence(t, charge, f)
        data[i] = data.get(i, LaurentPoly.zero()) + LaurentPoly.monomial(
            degree(t, charge, f)
        )
    return CharacterVector.build(f, data)


def ungraded_specht_character(
    lam: Multipartition, charge: Multicharge, f: int
) -> dict[ResidueSeq, int]:
    """dim of each residue block of the Specht module: counts of Std_i(lam)."""
    out: dict[ResidueSeq, int] = {}
    for t in standard_tableaux(lam):
        i = residue_sequence(t, charge, f)
        out[i] = out.get(i, 0) + 1
    return out


def bar_character(v: CharacterVector) -> CharacterVector:
    return v.bar()


def reduce_residues(v: CharacterVector, e: int) -> CharacterVector:
    """Push forward along entrywise reduction of residues mod e (e | f)."""
    if v.f % e:
        raise ValueError(f"{e} does not divide the modulus {v.f}")
    data: dict[ResidueSeq, LaurentPoly] = {}
    for k, poly in v.entries:
        key = tuple(x % e for x in k)
        data[key] = data.get(key, LaurentPoly.zero()) + poly
    return CharacterVector.build(e, data)


def reduce_residue_map(m: Mapping[ResidueSeq, int], e: int) -> dict[ResidueSeq, int]:
    out: dict[ResidueSeq, int] = {}
    for k, c in m.items():
        key = tuple(x % e for x in k)
        out[key] = out.get(key, 0) + c
    out = {k: v for k, v in out.items() if v}
    return out


def partial(v: CharacterVector) -> CharacterVector:
    return v.partial()


def branching_check(lam: Multipartition, charge: Multicharge, e: int) -> bool:
    """Ungraded branching: ch S^lam equals the sum over removable nodes A of
    ch S^{lam minus A} with the residue of A appended."""
    lhs = ungraded_specht_character(lam, charge, e)
    rhs: dict[ResidueSeq, int] = {}
    for node in lam.removable_nodes():
        i = residue(node, charge, e)
        sub = ungraded_specht_character(lam.remove_node(node), charge, e)
        for k, c in sub.items():
            key = k + (i,)
            rhs[key] = rhs.get(key, 0) + c
    rhs = {k: v for k, v in rhs.items() if v}
    return lhs == rhs
