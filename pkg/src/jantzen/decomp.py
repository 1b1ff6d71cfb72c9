"""Characteristic-zero graded decomposition matrices by bar-invariant
triangular reduction, almost-simple characters, adjustment matrices, and
matrix file I/O.

The algorithm: process shapes in a total order refining dominance, least
dominant first.  For each shape the graded Specht character w decomposes
uniquely as w = u + sum c_mu u_mu with u bar-invariant and c_mu in qN[q];
w - bar(w) eliminates u, the exactly-consistent linear system over the
already-computed bar-invariant characters u_mu yields c_mu - bar(c_mu), and
the strictly-positive part recovers c_mu.  A zero residual character means
the shape indexes no simple module.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Optional, Sequence

from jantzen.characters import CharacterVector, graded_specht_character
from jantzen.combinat import (
    Multicharge,
    Multipartition,
    dominates,
    enumerate_multipartitions,
)
from jantzen.ring import LaurentPoly

# ---------------------------------------------------------------------------
# Rational functions over Q, for the exact linear solves
# ---------------------------------------------------------------------------

_Poly = tuple[Fraction, ...]  # ascending coefficients, no trailing zeros


def _ptrim(c: list[Fraction]) -> _Poly:
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def _padd(a: _Poly, b: _Poly) -> _Poly:
    out = [Fraction(0)] * max(len(a), len(b))
    for i, x in enumerate(a):
        out[i] += x
    for i, x in enumerate(b):
        out[i] += x
    return _ptrim(out)


def _pneg(a: _Poly) -> _Poly:
    return tuple(-x for x in a)


def _pmul(a: _Poly, b: _Poly) -> _Poly:
    if not a or not b:
        return ()
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _ptrim(out)


def _pdivmod(a: _Poly, b: _Poly) -> tuple[_Poly, _Poly]:
    if not b:
        raise ZeroDivisionError
    rem = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    while len(rem) >= len(b) and any(rem):
        if rem[-1] == 0:
            rem.pop()
            continue
        shift = len(rem) - len(b)
        c = rem[-1] / b[-1]
        q[shift] = c
        for i, x in enumerate(b):
            rem[shift + i] -= c * x
        rem.pop()
    return _ptrim(q), _ptrim(rem)


def _pgcd(a: _Poly, b: _Poly) -> _Poly:
    while b:
        a, b = b, _pdivmod(a, b)[1]
    if a:
        lead = a[-1]
        a = tuple(x / lead for x in a)
    return a


@dataclass(frozen=True)
class RatFun:
    """A rational function num/den over Q, den monic, gcd-reduced."""

    num: _Poly
    den: _Poly

    @staticmethod
    def make(num: _Poly, den: _Poly) -> "RatFun":
        if not den:
            raise ZeroDivisionError
        if not num:
            return RatFun((), (Fraction(1),))
        g = _pgcd(num, den)
        if len(g) > 1 or g[0] != 1:
            num = _pdivmod(num, g)[0]
            den = _pdivmod(den, g)[0]
        lead = den[-1]
        if lead != 1:
            num = tuple(x / lead for x in num)
            den = tuple(x / lead for x in den)
        return RatFun(num, den)

    @staticmethod
    def from_laurent(p: LaurentPoly) -> "RatFun":
        if p.is_zero():
            return RatFun((), (Fraction(1),))
        lo = min(p.min_degree(), 0)
        num = [Fraction(0)] * (p.max_degree() - lo + 1)
        for e, a in p.items():
            num[e - lo] = Fraction(a)
        den = [Fraction(0)] * (-lo) + [Fraction(1)]
        return RatFun.make(_ptrim(num), _ptrim(den))

    def is_zero(self) -> bool:
        return not self.num

    def __add__(self, o: "RatFun") -> "RatFun":
        return RatFun.make(
            _padd(_pmul(self.num, o.den), _pmul(o.num, self.den)),
            _pmul(self.den, o.den),
        )

    def __sub__(self, o: "RatFun") -> "RatFun":
        return self + RatFun(_pneg(o.num), o.den)

    def __mul__(self, o: "RatFun") -> "RatFun":
        return RatFun.make(_pmul(self.num, o.num), _pmul(self.den, o.den))

    def __truediv__(self, o: "RatFun") -> "RatFun":
        if o.is_zero():
            raise ZeroDivisionError
        return RatFun.make(_pmul(self.num, o.den), _pmul(self.den, o.num))

    def to_laurent(self) -> LaurentPoly:
        """Convert an actually-Laurent rational function back, exactly."""
        if self.is_zero():
            return LaurentPoly.zero()
        num, den = list(self.num), list(self.den)
        shift = 0
        while num and num[0] == 0:
            num.pop(0)
            shift += 1
        while den and den[0] == 0:
            den.pop(0)
            shift -= 1
        q, r = _pdivmod(tuple(num), tuple(den))
        if r:
            raise ValueError("rational function is not a Laurent polynomial")
        out = {}
        for i, x in enumerate(q):
            if x:
                if x.denominator != 1:
                    raise ValueError("non-integral coefficient")
                out[i + shift] = int(x)
        return LaurentPoly(out)


def solve_in_span(
    basis: Sequence[CharacterVector], target: CharacterVector
) -> list[LaurentPoly]:
    """Solve target = sum_j c_j basis_j exactly over the rational-function
    field; the basis must be linearly independent and the system consistent.

    Gaussian elimination with pivoting on the lexicographic order of residue
    sequences.  Raises ValueError on inconsistency or dependence (either
    signals a convention error upstream).
    """
    keys = sorted({k for v in basis for k, _ in v.entries} | {k for k, _ in target.entries})
    ncols = len(basis)
    rows = [
        [RatFun.from_laurent(v.coeff(k)) for v in basis]
        + [RatFun.from_laurent(target.coeff(k))]
        for k in keys
    ]
    piv_rows: list[int] = []
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(rows)) if not rows[i][col].is_zero()), None)
        if piv is None:
            raise ValueError("basis characters are linearly dependent")
        rows[r], rows[piv] = rows[piv], rows[r]
        for i in range(len(rows)):
            if i != r and not rows[i][col].is_zero():
                factor = rows[i][col] / rows[r][col]
                rows[i] = [
                    a - factor * b for a, b in zip(rows[i], rows[r])
                ]
        piv_rows.append(r)
        r += 1
    for i in range(r, len(rows)):
        if not rows[i][ncols].is_zero():
            raise ValueError("inconsistent linear system (convention error)")
    out = []
    for col, pr in enumerate(piv_rows):
        out.append((rows[pr][ncols] / rows[pr][col]).to_laurent())
    return out


# ---------------------------------------------------------------------------
# Decomposition matrices
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DecompositionMatrix:
    """Graded decomposition data for one (level, n, modulus) triple.

    rows are all multipartitions in the fixed dominance-refining order;
    cols is the subset indexing nonzero simple modules.  entry(row, col) is
    the graded multiplicity, delta on the diagonal plus qN[q] off it, and
    vanishes unless the row dominates the column.
    """

    f: int
    p_context: int
    n: int
    level: int
    multicharge: tuple[int, ...]
    rows: tuple[Multipartition, ...]
    cols: tuple[Multipartition, ...]
    data: tuple[tuple[LaurentPoly, ...], ...]  # row-major

    def entry(self, lam: Multipartition, mu: Multipartition) -> LaurentPoly:
        return self.data[self.rows.index(lam)][self.cols.index(mu)]

    def validate(self) -> None:
        if set(self.cols) - set(self.rows):
            raise ValueError("columns must be a subset of rows")
        for ri, lam in enumerate(self.rows):
            for ci, mu in enumerate(self.cols):
                v = self.data[ri][ci]
                if lam == mu:
                    if v != LaurentPoly.one():
                        raise ValueError(f"diagonal entry at {mu} is not 1")
                elif not v.is_zero():
                    if not dominates(lam, mu) or lam == mu:
                        raise ValueError(f"nonzero entry at non-dominating {lam},{mu}")
                    if not v.is_nonneg() or (v.support() and v.min_degree() < 1):
                        raise ValueError(f"entry at {lam},{mu} is not in qN[q]")

    def at_one(self) -> list[list[int]]:
        return [[v.eval_at_one() for v in row] for row in self.data]

    def charge(self) -> Multicharge:
        return Multicharge(self.multicharge, self.f, self.n)

    def to_json(self) -> dict:
        return {
            "f": self.f,
            "p_context": self.p_context,
            "n": self.n,
            "level": self.level,
            "multicharge": list(self.multicharge),
            "rows": [lam.to_lists() for lam in self.rows],
            "cols": [mu.to_lists() for mu in self.cols],
            "entries": [v.to_pairs() for row in self.data for v in row],
        }

    @staticmethod
    def from_json(data: dict) -> "DecompositionMatrix":
        rows = tuple(Multipartition.from_lists(x) for x in data["rows"])
        cols = tuple(Multipartition.from_lists(x) for x in data["cols"])
        flat = [LaurentPoly.from_pairs(p) for p in data["entries"]]
        if len(flat) != len(rows) * len(cols):
            raise ValueError("entry count does not match rows x cols")
        table = tuple(
            tuple(flat[r * len(cols) : (r + 1) * len(cols)]) for r in range(len(rows))
        )
        matrix = DecompositionMatrix(
            f=int(data["f"]),
            p_context=int(data.get("p_context", 0)),
            n=int(data["n"]),
            level=int(data["level"]),
            multicharge=tuple(int(x) for x in data["multicharge"]),
            rows=rows,
            cols=cols,
            data=table,
        )
        matrix.validate()
        return matrix


def store_matrix(matrix: DecompositionMatrix, path: str | Path) -> None:
    Path(path).write_text(
        json.dumps(matrix.to_json(), sort_keys=True, separators=(",", ":")) + "\n"
    )


def load_matrix(path: str | Path) -> DecompositionMatrix:
    return DecompositionMatrix.from_json(json.loads(Path(path).read_text()))


EChars = dict[Multipartition, CharacterVector]

_SELF_CHECKED = False


def _startup_self_check() -> None:
    """One-off n=2 sanity run; an inconsistency here is a convention error."""
    global _SELF_CHECKED
    if _SELF_CHECKED:
        return
    _SELF_CHECKED = True
    charge = Multicharge((2,), 2, 2)
    matrix, _ = compute_decomposition_char0(1, 2, 2, charge)
    lam, mu = Multipartition(((2,),)), Multipartition(((1, 1),))
    if matrix.cols != (mu,) or matrix.entry(lam, mu) != LaurentPoly.monomial(1):
        raise AssertionError(
            "decomposition self-check failed: triangularity convention error"
        )


def compute_decomposition_char0(
    level: int,
    n: int,
    f: int,
    charge: Multicharge,
    order: Optional[Iterable[Multipartition]] = None,
) -> tuple[DecompositionMatrix, EChars]:
    """The characteristic-zero graded decomposition matrix for (level, n, f).

    Shapes are processed in a dominance-refining order from least to most
    dominant; every residual bar-invariant character u is either zero (the
    shape indexes no simple) or the character of an almost-simple module.
    """
    if order is None:
        _startup_self_check()
        shapes = enumerate_multipartitions(level, n)
    else:
        shapes = tuple(order)
        if set(shapes) != set(enumerate_multipartitions(level, n)):
            raise ValueError("order must enumerate every multipartition once")
    klesh: list[Multipartition] = []
    echars: EChars = {}
    coeffs: dict[tuple[Multipartition, Multipartition], LaurentPoly] = {}
    for lam in shapes:
        w = graded_specht_character(lam, charge, f)
        g = w - w.bar()
        basis = [echars[mu] for mu in klesh]
        sols = solve_in_span(basis, g) if basis else []
        u = w
        for mu, gmu in zip(klesh, sols):
            c = gmu.positive_part()
            if c.is_zero():
                continue
            if not c.is_nonneg():
                raise AssertionError(
                    f"negative graded decomposition number at ({lam}, {mu})"
                )
            if not dominates(lam, mu):
                raise AssertionError(
                    f"nonzero entry at non-dominating pair ({lam}, {mu})"
                )
            coeffs[lam, mu] = c
            u = u - echars[mu].scale(c)
        if u.bar() != u:
            raise AssertionError(f"residual character at {lam} is not bar-invariant")
        if not u.is_zero():
            klesh.append(lam)
            echars[lam] = u
            coeffs[lam, lam] = LaurentPoly.one()
    all_rows = enumerate_multipartitions(level, n)
    cols = tuple(mu for mu in all_rows if mu in set(klesh))
    table = tuple(
        tuple(coeffs.get((lam, mu), LaurentPoly.zero()) for mu in cols)
        for lam in all_rows
    )
    matrix = DecompositionMatrix(
        f=f,
        p_context=0,
        n=n,
        level=level,
        multicharge=charge.kappa,
        rows=all_rows,
        cols=cols,
        data=table,
    )
    matrix.validate()
    return matrix, echars


def e_character(
    matrix: DecompositionMatrix, echars: EChars, mu: Multipartition
) -> CharacterVector:
    if mu not in matrix.cols:
        raise ValueError(f"{mu} does not index a simple module")
    return echars[mu]


def echars_from_matrix(matrix: DecompositionMatrix) -> EChars:
    """Reconstruct the almost-simple characters by inverting the
    unitriangular column submatrix against the Specht characters."""
    charge = matrix.charge()
    out: EChars = {}
    for mu in matrix.cols:
        u = graded_specht_character(mu, charge, matrix.f)
        for nu in matrix.cols:
            if nu == mu:
                continue
            c = matrix.entry(mu, nu)
            if not c.is_zero():
                u = u - out[nu].scale(c)
        out[mu] = u
    return out


# ---------------------------------------------------------------------------
# Adjustment matrices
# ---------------------------------------------------------------------------

def adjustment_matrix(
    target: DecompositionMatrix, source: DecompositionMatrix, graded: bool = False
) -> tuple[Optional[dict], list[str]]:
    """Solve target = source * A for A with rows source.cols, cols target.cols.

    Ungraded (default): both matrices are evaluated at q = 1 and A must have
    non-negative integer entries.  Graded: the solve runs over Laurent
    polynomials and A must have non-negative coefficients.  Returns (A,
    report); A is None when no such matrix exists, with the violations
    reported.
    """
    if target.rows != source.rows:
        raise ValueError("row index sets differ")
    report: list[str] = []

    def tv(lam, mu):
        v = target.entry(lam, mu)
        return v if graded else LaurentPoly({0: v.eval_at_one()})

    def sv(lam, nu):
        v = source.entry(lam, nu)
        return v if graded else LaurentPoly({0: v.eval_at_one()})

    A: dict[tuple[Multipartition, Multipartition], LaurentPoly] = {}
    # the source columns are unitriangular, so the values are forced row by row
    for mu in target.cols:
        for nu in source.cols:
            val = tv(nu, mu)
            for nu2 in source.cols:
                if nu2 != nu and (nu2, mu) in A:
                    val = val - sv(nu, nu2) * A[nu2, mu]
            A[nu, mu] = val
    ok = True
    for lam in target.rows:
        for mu in target.cols:
            acc = LaurentPoly.zero()
            for nu in source.cols:
                acc = acc + sv(lam, nu) * A[nu, mu]
            if acc != tv(lam, mu):
                ok = False
                report.append(f"no solution: row {lam.to_text()}, col {mu.to_text()}")
    for (nu, mu), v in A.items():
        if not v.is_nonneg():
            ok = False
            report.append(
                f"negative entry at ({nu.to_text()}, {mu.to_text()}): {v!r}"
            )
    if not ok:
        return None, report
    out = {
        (nu.to_text(), mu.to_text()): (v if graded else v.eval_at_one())
        for (nu, mu), v in A.items()
    }
    return out, report


def adjustment_at_one(
    target: DecompositionMatrix, source: DecompositionMatrix
) -> Optional[dict]:
    """The q=1 adjustment with non-negative integer entries, or None."""
    A, _ = adjustment_matrix(target, source, graded=False)
    return A
