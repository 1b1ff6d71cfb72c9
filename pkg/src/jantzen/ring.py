"""Exact coefficient arithmetic: Laurent polynomials, cyclotomic polynomials
and the x-adic valuations nu_x(Phi_f(z)) that drive every Jantzen character.

Everything here is integer-exact.  Coefficients are Python ints, so there is
no overflow at any scale this library reaches.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Mapping


# ---------------------------------------------------------------------------
# Laurent polynomials
# ---------------------------------------------------------------------------

class LaurentPoly:
    """An integer-coefficient Laurent polynomial in one variable q.

    Immutable; zero coefficients are never stored.  Supports ring
    operations, the bar involution q -> 1/q and evaluation.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        c: dict[int, int] = {}
        for e, a in items:
            if a:
                c[e] = c.get(e, 0) + a
                if not c[e]:
                    del c[e]
        self._c = c

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero() -> "LaurentPoly":
        return LaurentPoly()

    @staticmethod
    def one() -> "LaurentPoly":
        return LaurentPoly({0: 1})

    @staticmethod
    def monomial(exp: int, coeff: int = 1) -> "LaurentPoly":
        return LaurentPoly({exp: coeff})

    # -- queries -----------------------------------------------------------

    def coeff(self, exp: int) -> int:
        return self._c.get(exp, 0)

    def items(self) -> Iterator[tuple[int, int]]:
        return iter(sorted(self._c.items()))

    def support(self) -> list[int]:
        return sorted(self._c)

    def is_zero(self) -> bool:
        return not self._c

    def min_degree(self) -> int:
        if not self._c:
            raise ValueError("zero polynomial has no degree")
        return min(self._c)

    def max_degree(self) -> int:
        if not self._c:
            raise ValueError("zero polynomial has no degree")
        return max(self._c)

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        c = dict(self._c)
        for e, a in other._c.items():
            c[e] = c.get(e, 0) + a
            if not c[e]:
                del c[e]
        out = LaurentPoly.__new__(LaurentPoly)
        out._c = c
        return out

    def __neg__(self) -> "LaurentPoly":
        out = LaurentPoly.__new__(LaurentPoly)
        out._c = {e: -a for e, a in self._c.items()}
        return out

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other) -> "LaurentPoly":
        if isinstance(other, int):
            out = LaurentPoly.__new__(LaurentPoly)
            out._c = {} if other == 0 else {e: a * other for e, a in self._c.items()}
            return out
        c: dict[int, int] = {}
        for e1, a1 in self._c.items():
            for e2, a2 in other._c.items():
                e = e1 + e2
                c[e] = c.get(e, 0) + a1 * a2
                if not c[e]:
                    del c[e]
        out = LaurentPoly.__new__(LaurentPoly)
        out._c = c
        return out

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self._c == ({} if other == 0 else {0: other})
        return isinstance(other, LaurentPoly) and self._c == other._c

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def __bool__(self) -> bool:
        return bool(self._c)

    # -- the operations the characters need --------------------------------

    def bar(self) -> "LaurentPoly":
        """The bar involution q -> q^{-1} (exponent negation)."""
        out = LaurentPoly.__new__(LaurentPoly)
        out._c = {-e: a for e, a in self._c.items()}
        return out

    def derivative_at_one(self) -> int:
        """Sum of exponent * coefficient, the derivative evaluated at q=1."""
        return sum(e * a for e, a in self._c.items())

    def eval_at_one(self) -> int:
        return sum(self._c.values())

    def positive_part(self) -> "LaurentPoly":
        """Strictly-positive-degree truncation of a bar-anti-invariant input.

        Raises ValueError unless bar(self) == -self; then the result d
        satisfies self == d - bar(d) and d is supported in degrees > 0.
        """
        if self.bar() != -self:
            raise ValueError("positive_part needs a bar-anti-invariant input")
        out = LaurentPoly.__new__(LaurentPoly)
        out._c = {e: a for e, a in self._c.items() if e > 0}
        return out

    def is_nonneg(self) -> bool:
        return all(a >= 0 for a in self._c.values())

    # -- serialization ------------------------------------------------------

    def to_pairs(self) -> list[list[int]]:
        """[[exponent, coefficient], ...] sorted by exponent."""
        return [[e, a] for e, a in sorted(self._c.items())]

    @staticmethod
    def from_pairs(pairs: Iterable[Iterable[int]]) -> "LaurentPoly":
        return LaurentPoly({int(e): int(a) for e, a in pairs})

    def __repr__(self) -> str:
        if not self._c:
            return "0"
        bits = []
        for e, a in sorted(self._c.items()):
            if e == 0:
                bits.append(f"{a}")
            elif e == 1:
                bits.append(f"{a}*q" if a != 1 else "q")
            else:
                bits.append(f"{a}*q^{e}" if a != 1 else f"q^{e}")
        return " + ".join(bits).replace("+ -", "- ")


def quantum_integer(k: int) -> LaurentPoly:
    """The quantum integer [k]_v = 1 + v + ... + v^{k-1}.

    For k < 0 this is (v^k - 1)/(v - 1) = -(v^k + ... + v^{-1}), so that
    [-k]_v = -v^{-k}[k]_v and [k]_1 = k hold for every k.
    """
    if k >= 0:
        return LaurentPoly({e: 1 for e in range(k)})
    return LaurentPoly({e: -1 for e in range(k, 0)})


def bar(p: LaurentPoly) -> LaurentPoly:
    return p.bar()


def positive_part(p: LaurentPoly) -> LaurentPoly:
    return p.positive_part()


def derivative_at_one(p: LaurentPoly) -> int:
    return p.derivative_at_one()


# ---------------------------------------------------------------------------
# Integer polynomials (dense, ascending) and cyclotomic polynomials
# ---------------------------------------------------------------------------

IntPoly = tuple[int, ...]  # coefficients ascending, no trailing zero


def poly_trim(c: list[int]) -> IntPoly:
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def poly_mul(a: IntPoly, b: IntPoly) -> IntPoly:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return poly_trim(out)


def poly_divexact(num: IntPoly, den: IntPoly) -> IntPoly:
    """Exact division in Z[x]; raises if the division leaves a remainder."""
    if not den:
        raise ZeroDivisionError
    rem = list(num)
    out = [0] * (max(len(num) - len(den) + 1, 0))
    while len(rem) >= len(den) and any(rem):
        shift = len(rem) - len(den)
        lead, dlead = rem[-1], den[-1]
        if lead % dlead:
            raise ValueError("not an exact division")
        q = lead // dlead
        out[shift] = q
        for i, d in enumerate(den):
            rem[shift + i] -= q * d
        while rem and rem[-1] == 0:
            rem.pop()
    if any(rem):
        raise ValueError("not an exact division")
    return poly_trim(out)


@lru_cache(maxsize=None)
def cyclotomic(f: int) -> IntPoly:
    """The f-th cyclotomic polynomial over Z.

    Computed by exact division of x^f - 1 by the Phi_d for proper
    divisors d of f.
    """
    if f < 1:
        raise ValueError("f must be positive")
    num = [0] * (f + 1)
    num[0], num[f] = -1, 1
    out = poly_trim(num)
    for d in range(1, f):
        if f % d == 0:
            out = poly_divexact(out, cyclotomic(d))
    return out


def divisors(n: int) -> list[int]:
    out = [d for d in range(1, n + 1) if n % d == 0]
    return out


# ---------------------------------------------------------------------------
# Valuation contexts and nu_x
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ValuationContext:
    """The pair (e, p): quantum characteristic e >= 2 and field characteristic.

    p = 0 means characteristic zero.  For p > 0 either e = p (the degenerate
    case, Hecke parameter 1) or gcd(e, p) = 1 (a genuine primitive e-th root
    of unity exists in characteristic p).
    """

    e: int
    p: int = 0

    def __post_init__(self):
        if self.e < 2:
            raise ValueError("quantum characteristic must be >= 2")
        if self.p < 0:
            raise ValueError("characteristic must be >= 0")
        if self.p:
            from math import gcd

            if self.e != self.p and gcd(self.e, self.p) != 1:
                raise ValueError(
                    f"invalid context: e={self.e}, p={self.p} need e=p or gcd(e,p)=1"
                )


def nu_phi(f: int, ctx: ValuationContext) -> int:
    """nu_x(Phi_f(z)) for z = x + xi, xi of quantum characteristic ctx.e.

    For gcd(e, p) = 1 or p = 0 this is 1 for f = e, (p-1)p^{r-1} for
    f = e*p^r with r > 0, and 0 otherwise.  In the degenerate case e = p
    the Hecke parameter is xi = 1 and the correct values are
    (p-1)p^{r-1} for every f = p^r with r >= 1 (in particular p - 1, not 1,
    at f = e itself); this is forced by Phi_{p^r}(1+x) = ((1+x)^{p^{r-1}(p-1)}
    + ... ) = x^{(p-1)p^{r-1}} mod p and is confirmed by the finite-field
    oracle below.
    """
    e, p = ctx.e, ctx.p
    if f < 2:
        raise ValueError("f must be >= 2")
    if p == 0:
        return 1 if f == e else 0
    if e == p:
        # xi = 1: Phi_f(1+x) vanishes at x = 0 exactly when f is a power of p.
        r = 0
        m = f
        while m % p == 0:
            m //= p
            r += 1
        return (p - 1) * p ** (r - 1) if (m == 1 and r >= 1) else 0
    if f == e:
        return 1
    if f % e == 0:
        m = f // e
        r = 0
        while m % p == 0:
            m //= p
            r += 1
        if m == 1 and r >= 1:
            return (p - 1) * p ** (r - 1)
    return 0


@lru_cache(maxsize=None)
def nu_quantum(h: int, ctx: ValuationContext) -> int:
    """nu_x([h]_z) = sum of nu_phi(d) over divisors d > 1 of h."""
    if h < 1:
        raise ValueError("h must be positive")
    return sum(nu_phi(d, ctx) for d in divisors(h) if d > 1)


# ---------------------------------------------------------------------------
# Finite-field oracle for nu_phi
# ---------------------------------------------------------------------------
#
# An independent check of nu_phi: build GF(p^k) containing a primitive e-th
# root of unity xi, expand Phi_f(x + xi) there and read off the index of the
# first nonzero coefficient.


class _GF:
    """GF(p^k) as F_p[y]/(m(y)) with elements stored as coefficient tuples."""

    def __init__(self, p: int, k: int):
        self.p = p
        self.k = k
        self.modulus = _find_irreducible(p, k)
        self.zero = (0,) * k
        self.one = (1,) + (0,) * (k - 1)

    def elem(self, coeffs: Iterable[int]) -> tuple[int, ...]:
        c = [x % self.p for x in coeffs]
        c += [0] * (self.k - len(c))
        return tuple(c[: self.k])

    def add(self, a, b):
        return tuple((x + y) % self.p for x, y in zip(a, b))

    def sub(self, a, b):
        return tuple((x - y) % self.p for x, y in zip(a, b))

    def mul(self, a, b):
        p, k, m = self.p, self.k, self.modulus
        prod = [0] * (2 * k - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    prod[i + j] = (prod[i + j] + x * y) % p
        # reduce modulo m(y), which is monic of degree k
        for i in range(len(prod) - 1, k - 1, -1):
            c = prod[i]
            if c:
                prod[i] = 0
                for j in range(k):
                    prod[i - k + j] = (prod[i - k + j] - c * m[j]) % p
        return tuple(prod[:k])

    def pow(self, a, n: int):
        out, base = self.one, a
        while n:
            if n & 1:
                out = self.mul(out, base)
            base = self.mul(base, base)
            n >>= 1
        return out

    def elements(self) -> Iterator[tuple[int, ...]]:
        def rec(i, acc):
            if i == self.k:
                yield tuple(acc)
                return
            for c in range(self.p):
                yield from rec(i + 1, acc + [c])

        yield from rec(0, [])


def _poly_mod_irreducible(p: int, coeffs: tuple[int, ...]) -> bool:
    """Irreducibility over F_p by trial division by all lower-degree monics."""
    k = len(coeffs) - 1

    def divides(d: tuple[int, ...]) -> bool:
        rem = list(coeffs)
        dd = len(d) - 1
        inv = pow(d[-1], -1, p)
        while len(rem) - 1 >= dd and any(rem):
            q = rem[-1] * inv % p
            shift = len(rem) - len(d)
            for i, c in enumerate(d):
                rem[shift + i] = (rem[shift + i] - q * c) % p
            while rem and rem[-1] == 0:
                rem.pop()
        return not any(rem)

    def monics(deg: int):
        def rec(i, acc):
            if i == deg:
                yield tuple(acc) + (1,)
                return
            for c in range(p):
                yield from rec(i + 1, acc + [c])

        yield from rec(0, [])

    for d in range(1, k // 2 + 1):
        for g in monics(d):
            if divides(g):
                return False
    return True


@lru_cache(maxsize=None)
def _find_irreducible(p: int, k: int) -> tuple[int, ...]:
    if k == 1:
        return (0, 1)
    def candidates():
        def rec(i, acc):
            if i == k:
                yield tuple(acc) + (1,)
                return
            for c in range(p):
                yield from rec(i + 1, acc + [c])

        yield from rec(0, [])

    for cand in candidates():
        if cand[0] != 0 and _poly_mod_irreducible(p, cand):
            return cand
    raise RuntimeError(f"no irreducible of degree {k} over F_{p}")  # unreachable


def _primitive_root_of_unity(field: _GF, e: int):
    """An element of multiplicative order exactly e, by direct search."""
    for a in field.elements():
        if a == field.zero:
            continue
        if field.pow(a, e) == field.one:
            # order divides e; check it is exactly e
            if all(field.pow(a, d) != field.one for d in divisors(e)[:-1]):
                return a
    return None


def ff_valuation_oracle(f: int, ctx: ValuationContext, degree_bound: int = 8) -> int:
    """nu_x(Phi_f(x + xi)) computed literally inside GF(p^k)[x].

    Reduces the integral cyclotomic polynomial mod p, substitutes x + xi for
    a primitive e-th root of unity xi of GF(p^k) (k minimal with e | p^k - 1;
    xi = 1 in the degenerate case e = p), and returns the index of the first
    nonzero coefficient.
    """
    p, e = ctx.p, ctx.e
    if p == 0:
        raise ValueError("the finite-field oracle needs p > 0")
    if e == p:
        field, xi = _GF(p, 1), (1,)
    else:
        k = next((k for k in range(1, degree_bound + 1) if (p**k - 1) % e == 0), None)
        if k is None:
            raise ValueError(f"no GF({p}^k) with k <= {degree_bound} contains e={e}th roots")
        field = _GF(p, k)
        xi = _primitive_root_of_unity(field, e)
        if xi is None:
            raise ValueError("primitive root search failed")  # pragma: no cover

    phi = cyclotomic(f)
    # coefficients of Phi_f(x + xi): c_j = sum_i phi_i * C(i, j) xi^{i-j}
    from math import comb

    deg = len(phi) - 1
    for j in range(deg + 1):
        acc = field.zero
        for i in range(j, deg + 1):
            if phi[i]:
                scalar = (phi[i] * comb(i, j)) % p
                if scalar:
                    term = field.mul(field.elem((scalar,)), field.pow(xi, i - j))
                    acc = field.add(acc, term)
        if acc != field.zero:
            return j
    raise RuntimeError("cyclotomic polynomial vanished identically")  # pragma: no cover
