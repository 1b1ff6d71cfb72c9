"""The four routes to the Jantzen character of a Specht module.

Route gamma: x-adic valuations of the residue-split Gram determinants,
through the seminormal gamma coefficients.
Route degree: weighted sums of KLR tableau degrees over all moduli e*p^r.
Route classical: the rim-hook wrapping sum formula, a signed sum of Specht
characters that the theory guarantees collapses to non-negative entries.
Route positive: derivatives at q=1 of characteristic-zero graded
decomposition numbers against almost-simple characters.

All four must agree exactly; their disagreement is the library's primary
regression signal.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Optional

from jantzen.characters import (
    CharacterVector,
    reduce_residue_map,
    ungraded_specht_character,
)
from jantzen.combinat import (
    Multicharge,
    Multipartition,
    Node,
    beta_sequence,
    normalize_beta,
    rim_hook,
    wrap_hook,
)
from jantzen.decomp import DecompositionMatrix, EChars, compute_decomposition_char0
from jantzen.gamma import gamma_all
from jantzen.ring import ValuationContext, nu_phi, nu_quantum
from jantzen.tableaux import degree, residue_sequence, standard_tableaux

ResidueSeq = tuple[int, ...]


@dataclass(frozen=True)
class JantzenCharacter:
    """The character of the sum of the Jantzen layers of one Specht module."""

    shape: Multipartition
    e: int
    p: int
    multicharge: tuple[int, ...]
    route: str
    entries: tuple[tuple[ResidueSeq, int], ...]

    @staticmethod
    def build(
        shape: Multipartition,
        ctx: ValuationContext,
        charge: Multicharge,
        route: str,
        data: Mapping[ResidueSeq, int],
    ) -> "JantzenCharacter":
        cleaned = {tuple(k): v for k, v in data.items() if v}
        bad = {k: v for k, v in cleaned.items() if v < 0}
        if bad:
            raise AssertionError(
                f"negative Jantzen character entries via route {route} "
                f"at {shape.to_text()}: {bad}"
            )
        return JantzenCharacter(
            shape, ctx.e, ctx.p, charge.kappa, route, tuple(sorted(cleaned.items()))
        )

    def as_dict(self) -> dict[ResidueSeq, int]:
        return dict(self.entries)

    def same_character(self, other: "JantzenCharacter") -> bool:
        return self.entries == other.entries

    def is_zero(self) -> bool:
        return not self.entries

    def to_json(self) -> dict:
        return {
            "lambda": self.shape.to_lists(),
            "e": self.e,
            "p": self.p,
            "multicharge": list(self.multicharge),
            "route": self.route,
            "entries": [[list(k), v] for k, v in self.entries],
        }


# ---------------------------------------------------------------------------
# Route A: Gram determinant valuations
# ---------------------------------------------------------------------------

def jantzen_gamma(
    lam: Multipartition, ctx: ValuationContext, charge: Multicharge
) -> JantzenCharacter:
    """Entry at i is the valuation of det of the i-block Gram matrix."""
    out: dict[ResidueSeq, int] = {}
    gammas = gamma_all(lam, charge)
    for t in standard_tableaux(lam):
        i = residue_sequence(t, charge, ctx.e)
        out[i] = out.get(i, 0) + gammas[t].valuation(ctx)
    return JantzenCharacter.build(lam, ctx, charge, "gamma", out)


# ---------------------------------------------------------------------------
# Route B: tableau degrees
# ---------------------------------------------------------------------------

def required_moduli(ctx: ValuationContext, charge: Multicharge) -> list[int]:
    """The moduli f = e * p^r that can carry valuation at this charge:
    f = e always, then e*p^r up to the content spread (degrees and hook
    weights vanish beyond it, so later terms contribute nothing)."""
    fs = [ctx.e]
    if ctx.p:
        f = ctx.e * ctx.p
        while f <= charge.content_spread():
            fs.append(f)
            f *= ctx.p
    return fs


def pdeg(lam: Multipartition, i: ResidueSeq, ctx: ValuationContext, charge: Multicharge) -> int:
    """The (e,p,i)-degree: nu_phi-weighted degree sum over Std_i(lam).

    Equals deg_{e,i} + sum_r (p-1)p^{r-1} deg_{ep^r,i} whenever gcd(e,p)=1
    or p=0; the uniform nu_phi weights also cover the degenerate e=p case.
    """
    i = tuple(x % ctx.e for x in i)
    total = 0
    for t in standard_tableaux(lam):
        if residue_sequence(t, charge, ctx.e) != i:
            continue
        for f in required_moduli(ctx, charge):
            w = nu_phi(f, ctx)
            if w:
                total += w * degree(t, charge, f)
    return total


def jantzen_degree(
    lam: Multipartition, ctx: ValuationContext, charge: Multicharge
) -> JantzenCharacter:
    out: dict[ResidueSeq, int] = {}
    weights = [(f, nu_phi(f, ctx)) for f in required_moduli(ctx, charge)]
    for t in standard_tableaux(lam):
        i = residue_sequence(t, charge, ctx.e)
        val = sum(w * degree(t, charge, f) for f, w in weights if w)
        out[i] = out.get(i, 0) + val
    return JantzenCharacter.build(lam, ctx, charge, "degree", out)


# ---------------------------------------------------------------------------
# Route C: the classical (rim hook) sum formula
# ---------------------------------------------------------------------------

def d_coefficient(
    beta: tuple[int, ...], i: ResidueSeq, charge: Multicharge, e: int
) -> int:
    """Signed dimension of the i-block of the shape a beta sequence sorts to."""
    norm = normalize_beta(beta, charge)
    if norm is None:
        return 0
    shape, sign = norm
    i = tuple(x % e for x in i)
    return sign * ungraded_specht_character(shape, charge, e).get(i, 0)


@dataclass(frozen=True)
class ClassicalTerm:
    """One (anchor node, target row) wrapping term of the classical formula."""

    alpha: Node
    t: int
    shape: Optional[Multipartition]
    sign: int
    hook_length: int
    cohook_length: int
    weight: int  # nu_x([h']_z) for the ambient context

    @property
    def inert(self) -> bool:
        return self.shape is None or self.weight == 0


def classical_terms(
    lam: Multipartition, ctx: ValuationContext, charge: Multicharge
) -> list[ClassicalTerm]:
    """One term per anchor node and row t > r_alpha.

    Rows r_alpha < t <= r_alpha + leg cannot receive the wrapped hook (the
    cohook length is negative there); such terms are retained but inert.
    """
    out = []
    beta = beta_sequence(lam, charge).beta
    top = charge.level * charge.n
    for alpha in sorted(lam.nodes()):
        hook = rim_hook(lam, alpha, charge)
        s = hook.foot_row
        for t in range(s + 1, top + 1):
            cohook = beta[s - 1] - beta[t - 1] - hook.hook_length
            if t <= s + hook.leg_length:
                out.append(
                    ClassicalTerm(alpha, t, None, 0, hook.hook_length, cohook, 0)
                )
                continue
            res = wrap_hook(lam, alpha, t, charge)
            weight = nu_quantum(res.cohook_length, ctx) if res.cohook_length > 0 else 0
            out.append(
                ClassicalTerm(
                    alpha,
                    t,
                    res.shape,
                    res.sign,
                    hook.hook_length,
                    res.cohook_length,
                    weight,
                )
            )
    return out


def jantzen_classical(
    lam: Multipartition, ctx: ValuationContext, charge: Multicharge
) -> JantzenCharacter:
    """Signed sum of wrapped-shape characters; entries must end up >= 0."""
    out: dict[ResidueSeq, int] = {}
    for term in classical_terms(lam, ctx, charge):
        if term.inert:
            continue
        for i, d in ungraded_specht_character(term.shape, charge, ctx.e).items():
            out[i] = out.get(i, 0) + term.sign * term.weight * d
    return JantzenCharacter.build(lam, ctx, charge, "classical", out)


def gram_exponents_beta(
    lam: Multipartition, i: ResidueSeq, charge: Multicharge, e: int | None = None
) -> dict[int, int]:
    """Quantum-integer exponents of the i-block Gram determinant from charged
    beta numbers alone.

    For every position pair s < t with difference D = beta_s - beta_t and
    every 0 < h < D, moving h from position s to position t contributes its
    normalize sign times the i-block dimension of the sorted shape, to the
    exponent of [D - h]_z.  Unit-equivalent to the gamma factorization in
    every valuation context (the identity cannot hold at the level of exact
    cyclotomic exponents; see the Gram consistency tests).
    """
    e = charge.e if e is None else e
    beta = beta_sequence(lam, charge).beta
    N = len(beta)
    out: dict[int, int] = {}
    for s in range(N):
        for t in range(s + 1, N):
            D = beta[s] - beta[t]
            for h in range(1, D):
                seq = list(beta)
                seq[s] -= h
                seq[t] += h
                d = d_coefficient(tuple(seq), i, charge, e)
                if d:
                    out[D - h] = out.get(D - h, 0) + d
    return {h: v for h, v in out.items() if v}


# ---------------------------------------------------------------------------
# Route D: the positive sum formula
# ---------------------------------------------------------------------------

Matrices = Mapping[int, tuple[DecompositionMatrix, EChars]]


def compute_required_matrices(
    level: int, n: int, ctx: ValuationContext, charge: Multicharge
) -> dict[int, tuple[DecompositionMatrix, EChars]]:
    """Characteristic-zero matrices for every required modulus f = e*p^r,
    all built on the same integer multicharge."""
    out = {}
    for f in required_moduli(ctx, charge):
        out[f] = compute_decomposition_char0(level, n, f, charge)
    return out


def jantzen_positive(
    lam: Multipartition,
    ctx: ValuationContext,
    charge: Multicharge,
    matrices: Optional[Matrices] = None,
) -> JantzenCharacter:
    """nu_phi(f)-weighted sums of d'(1) coefficients against the ungraded
    almost-simple characters, reduced to residues mod e."""
    if matrices is None:
        matrices = compute_required_matrices(lam.level, lam.size, ctx, charge)
    out: dict[ResidueSeq, int] = {}
    for f in required_moduli(ctx, charge):
        w = nu_phi(f, ctx)
        if not w:
            continue
        if f not in matrices:
            raise ValueError(f"missing decomposition matrix for modulus {f}")
        matrix, echars = matrices[f]
        for mu in matrix.cols:
            dprime = matrix.entry(lam, mu).derivative_at_one()
            if dprime < 0 or (mu == lam and dprime != 0):
                raise AssertionError(f"positivity violated at ({lam}, {mu})")
            if not dprime:
                continue
            reduced = reduce_residue_map(echars[mu].ungraded(), ctx.e)
            for i, c in reduced.items():
                out[i] = out.get(i, 0) + w * dprime * c
    return JantzenCharacter.build(lam, ctx, charge, "positive", out)


ROUTES = {
    "gamma": jantzen_gamma,
    "degree": jantzen_degree,
    "classical": jantzen_classical,
    "positive": jantzen_positive,
}


def jantzen_character(
    lam: Multipartition,
    ctx: ValuationContext,
    charge: Multicharge,
    route: str = "gamma",
    matrices: Optional[Matrices] = None,
) -> JantzenCharacter:
    if route == "positive":
        return jantzen_positive(lam, ctx, charge, matrices)
    try:
        fn = ROUTES[route]
    except KeyError:
        raise ValueError(f"unknown route {route!r}") from None
    return fn(lam, ctx, charge)


# ---------------------------------------------------------------------------
# Corollaries: decomposition number bound, irreducibility, James regime
# ---------------------------------------------------------------------------

def j_bound(
    lam: Multipartition,
    mu: Multipartition,
    ctx: ValuationContext,
    charge: Multicharge,
    matrices: Optional[Matrices] = None,
    modular_adjustments: Optional[Mapping[int, Mapping]] = None,
) -> tuple[int, bool]:
    """Upper bound for the decomposition number d^{F,e}_{lam,mu}, mu != lam.

    Returns (value, exact).  In characteristic zero the adjustment is the
    identity and the bound is exactly d'(1).  In characteristic p the exact
    bound needs the modular adjustment data a_{nu,mu} = [E^nu_{f,e}:D^mu];
    when that external input is absent the bound falls back to expressing
    the reduced almost-simple characters over the modulus-e ones
    (flagged approximate: exact=False).
    """
    if lam == mu:
        raise ValueError("the bound concerns mu distinct from lam")
    if matrices is None:
        matrices = compute_required_matrices(lam.level, lam.size, ctx, charge)
    base_matrix, base_echars = matrices[ctx.e]
    if mu not in base_matrix.cols:
        raise ValueError(f"{mu} does not index a simple module at e={ctx.e}")
    if ctx.p == 0:
        return base_matrix.entry(lam, mu).derivative_at_one(), True
    total = 0
    exact = modular_adjustments is not None
    for f in required_moduli(ctx, charge):
        w = nu_phi(f, ctx)
        if not w or f not in matrices:
            continue
        matrix, echars = matrices[f]
        for nu in matrix.cols:
            dprime = matrix.entry(lam, nu).derivative_at_one()
            if not dprime:
                continue
            if modular_adjustments is not None:
                a = modular_adjustments.get(f, {}).get((nu.to_text(), mu.to_text()), 0)
            else:
                a = _echar_coefficient(echars[nu], base_echars, mu, ctx.e)
            total += w * dprime * a
    return total, exact


def _echar_coefficient(
    u_nu: CharacterVector, base_echars: EChars, mu: Multipartition, e: int
) -> int:
    """Coefficient of the modulus-e almost-simple character u_mu in the
    residue-reduced character of u_nu (a rational solve; the almost-simple
    characters at modulus e are linearly independent)."""
    from jantzen.decomp import solve_in_span
    from jantzen.ring import LaurentPoly

    reduced = reduce_residue_map(u_nu.ungraded(), e)
    target = CharacterVector.build(
        e, {k: LaurentPoly({0: v}) for k, v in reduced.items()}
    )
    mus = list(base_echars)
    basis = [
        CharacterVector.build(
            e, {k: LaurentPoly({0: v}) for k, v in base_echars[m].ungraded().items()}
        )
        for m in mus
    ]
    sols = solve_in_span(basis, target)
    coeff = sols[mus.index(mu)]
    if coeff.is_zero():
        return 0
    if coeff.support() != [0]:
        raise AssertionError("non-constant coefficient in character expansion")
    return coeff.coeff(0)


def irreducibility_check(
    lam: Multipartition, ctx: ValuationContext, matrices: Matrices
) -> bool:
    """S^lam stays irreducible over characteristic p iff its row is trivial
    in the characteristic-zero matrix at every required modulus."""
    if ctx.p == 0:
        raise ValueError("the criterion concerns positive characteristic")
    for f, (matrix, _) in matrices.items():
        for mu in matrix.cols:
            if mu == lam:
                continue
            if not matrix.entry(lam, mu).is_zero():
                return False
        if lam not in matrix.cols:
            # a nontrivial radical already in characteristic zero
            return False
    return True


def e_weight(parts: tuple[int, ...], e: int) -> int:
    """Number of rim e-hooks stripped to reach the e-core (level 1)."""
    n = len(parts) + 1
    beta = {parts[r] + n - r - 1 for r in range(len(parts))} | set(
        range(0, n - len(parts))
    ) if False else None
    # first-column beta set of length n
    b = [parts[r] + n - 1 - r for r in range(len(parts))] + list(
        range(n - len(parts) - 1, -1, -1)
    )
    beads = set(b)
    weight = 0
    moved = True
    while moved:
        moved = False
        for x in sorted(beads):
            if x - e >= 0 and x - e not in beads:
                beads.remove(x)
                beads.add(x - e)
                weight += 1
                moved = True
                break
    return weight


def james_regime_check(
    parts: tuple[int, ...], e: int, p: int, charge: Multicharge
) -> bool:
    """For level 1 and e-weight below p, the characteristic-p Jantzen
    character equals the characteristic-zero one.  Returns True vacuously
    when the weight hypothesis fails (the statement is then not asserted).
    """
    lam = Multipartition((tuple(parts),))
    if e_weight(tuple(parts), e) >= p:
        return True
    mod_p = jantzen_degree(lam, ValuationContext(e, p), charge)
    mod_0 = jantzen_degree(lam, ValuationContext(e, 0), charge)
    return mod_p.same_character(mod_0)
