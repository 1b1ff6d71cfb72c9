"""Gamma coefficients of the seminormal basis, as formal quantum-integer
products, and the residue-split Gram determinant factorizations.

A QIntProduct is sign * z^a * prod_h [h]_z^{e_h} with h > 0.  Only the
[h]-exponents (equivalently the cyclotomic exponents) are consumed
downstream; z is a unit for every valuation of interest and the z-exponent
is bookkeeping that the closed form leaves undetermined.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable

from jantzen.combinat import (
    Multicharge,
    Multipartition,
    Node,
    below,
    content,
)
from jantzen.ring import ValuationContext, divisors, nu_quantum
from jantzen.tableaux import (
    StandardTableau,
    content_sequence,
    degree,
    down_transpositions,
    initial_tableau,
    residue_sequence,
    restriction_shapes,
    standard_tableaux,
)


@dataclass(frozen=True)
class QIntProduct:
    """A formal product sign * z^{z_exp} * prod [h]_z^{factors[h]}."""

    sign: int = 1
    z_exp: int = 0
    factors: tuple[tuple[int, int], ...] = ()

    @staticmethod
    def one() -> "QIntProduct":
        return QIntProduct()

    def _as_dict(self) -> dict[int, int]:
        return dict(self.factors)

    def times_qint(self, k: int, power: int = 1) -> "QIntProduct":
        """Multiply by [k]_z^power, normalizing [-k]_z = -z^{-k}[k]_z."""
        if k == 0:
            raise ValueError("[0]_z is zero")
        sign, z_exp = self.sign, self.z_exp
        if k < 0:
            k = -k
            sign *= (-1) ** (power % 2)
            z_exp += -k * power
        d = self._as_dict()
        if k != 1:
            d[k] = d.get(k, 0) + power
            if not d[k]:
                del d[k]
        return QIntProduct(sign, z_exp, tuple(sorted(d.items())))

    def times_z(self, a: int) -> "QIntProduct":
        return QIntProduct(self.sign, self.z_exp + a, self.factors)

    def __mul__(self, other: "QIntProduct") -> "QIntProduct":
        d = self._as_dict()
        for h, e in other.factors:
            d[h] = d.get(h, 0) + e
            if not d[h]:
                del d[h]
        return QIntProduct(
            self.sign * other.sign, self.z_exp + other.z_exp, tuple(sorted(d.items()))
        )

    def valuation(self, ctx: ValuationContext) -> int:
        return sum(e * nu_quantum(h, ctx) for h, e in self.factors)

    def same_factors(self, other: "QIntProduct") -> bool:
        return self.factors == other.factors


@dataclass(frozen=True)
class PhiFactorization:
    """Exponents of cyclotomic polynomials Phi_f(z), f >= 2, finite support."""

    phi: tuple[tuple[int, int], ...] = ()

    def as_dict(self) -> dict[int, int]:
        return dict(self.phi)

    def exponent(self, f: int) -> int:
        return dict(self.phi).get(f, 0)

    def valuation(self, ctx: ValuationContext) -> int:
        from jantzen.ring import nu_phi

        return sum(e * nu_phi(f, ctx) for f, e in self.phi)

    def to_pairs(self) -> list[list[int]]:
        return [[f, e] for f, e in self.phi]

    @staticmethod
    def from_map(m: dict[int, int]) -> "PhiFactorization":
        return PhiFactorization(tuple(sorted((f, e) for f, e in m.items() if e)))


def phi_exponents(gamma: QIntProduct) -> PhiFactorization:
    """Expand each [h]_z into prod_{d | h, d > 1} Phi_d(z) and sum exponents."""
    out: dict[int, int] = {}
    for h, e in gamma.factors:
        for d in divisors(h):
            if d > 1:
                out[d] = out.get(d, 0) + e
    return PhiFactorization.from_map(out)


# ---------------------------------------------------------------------------
# The three gamma pipelines
# ---------------------------------------------------------------------------

def gamma_initial(lam: Multipartition, charge: Multicharge) -> QIntProduct:
    """gamma of the initial tableau: prod over nodes of [c]_z times the
    cross-component factors z^{kappa_m} [kappa_l + c - r - kappa_m]_z."""
    out = QIntProduct.one()
    kappa = charge.kappa
    for node in lam.nodes():
        out = out.times_qint(node.c)
        for m in range(node.l + 1, charge.level + 1):
            arg = kappa[node.l - 1] + node.c - node.r - kappa[m - 1]
            if arg <= 0:
                raise ValueError("separation violated in gamma_initial")
            out = out.times_z(kappa[m - 1]).times_qint(arg)
    return out


def gamma_step(gamma: QIntProduct, rho: int) -> QIntProduct:
    """One dominance-decreasing step: multiply by [1+rho][1-rho]/[rho]^2."""
    if rho == 0:
        raise ValueError("rho must be nonzero")
    if abs(rho) == 1:
        raise ValueError("rho = +-1 would introduce the zero factor [0]_z")
    return gamma.times_qint(1 + rho).times_qint(1 - rho).times_qint(rho, -2)


@lru_cache(maxsize=None)
def gamma_all(
    lam: Multipartition, charge: Multicharge
) -> dict[StandardTableau, QIntProduct]:
    """gamma for every standard tableau, by the recurrence from t^lam.

    Breadth-first along dominance-decreasing adjacent transpositions; when a
    tableau is reached twice the two values are asserted equal (path
    independence of the recurrence).
    """
    tlam = initial_tableau(lam)
    out = {tlam: gamma_initial(lam, charge)}
    frontier = [tlam]
    while frontier:
        nxt = []
        for t in frontier:
            contents = content_sequence(t, charge)
            for r, v in down_transpositions(t):
                rho = contents[r - 1] - contents[r]
                g = gamma_step(out[t], rho)
                if v in out:
                    assert out[v] == g, "gamma recurrence is path dependent"
                else:
                    out[v] = g
                    nxt.append(v)
        frontier = nxt
    assert len(out) == len(standard_tableaux(lam))
    return out


def gamma_closed(t: StandardTableau, charge: Multicharge) -> QIntProduct:
    """The closed product over addable/removable nodes below each entry.

    The z-power of the closed form is not pinned down; the returned z_exp is
    0 and must not be compared against the recurrence.
    """
    out = QIntProduct.one()
    shapes = restriction_shapes(t)
    nodes = t.nodes_in_order()
    for k in range(1, t.size + 1):
        shape = shapes[k - 1]
        node = nodes[k - 1]
        ck = content(node, charge)
        for alpha in shape.addable_nodes():
            if below(alpha, node):
                arg = ck - content(alpha, charge)
                if arg <= 0:
                    raise ValueError("content order violated below an entry")
                out = out.times_qint(arg)
        for beta_node in shape.removable_nodes():
            if below(beta_node, node):
                arg = ck - content(beta_node, charge)
                if arg <= 0:
                    raise ValueError("content order violated below an entry")
                out = out.times_qint(arg, -1)
    return out


def degree_factorization(t: StandardTableau, charge: Multicharge) -> PhiFactorization:
    """Phi_f-exponent deg_f(t) for every f from 2 up to the content spread."""
    return PhiFactorization.from_map(
        {f: degree(t, charge, f) for f in range(2, charge.content_spread() + 1)}
    )


def gram_det_factors(
    lam: Multipartition, i: tuple[int, ...], charge: Multicharge, e: int | None = None
) -> QIntProduct:
    """det of the residue-block Gram matrix: product of gamma over Std_i(lam).

    The residue class i is taken mod e (defaulting to the charge's e); an
    empty class gives the empty product 1.
    """
    e = charge.e if e is None else e
    out = QIntProduct.one()
    for t in standard_tableaux(lam):
        if residue_sequence(t, charge, e) == tuple(x % e for x in i):
            out = out * gamma_all(lam, charge)[t]
    return out
