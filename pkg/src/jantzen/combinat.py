"""Multipartitions, multicharges, charged beta numbers and rim hooks.

Conventions.  Nodes are 1-based triples (l, r, c): component, row, column.
A multicharge kappa is separated, meaning kappa_l >= kappa_{l+1} + 2n and
kappa_ell >= n; this makes contents of distinct components disjoint and the
charged beta windows non-overlapping.  Global row indices s in 1..ell*n split
as s = (l_s - 1) n + r_s.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, NamedTuple, Optional


class Node(NamedTuple):
    """A diagram node (component, row, column), all 1-based.

    Tuple comparison gives the lexicographic node order used by the degree
    statistics; the distinct "below" order is the separate function below().
    """

    l: int
    r: int
    c: int


def below(a: Node, b: Node) -> bool:
    """True if node a lies strictly below node b in the corner order.

    Strictly below means: later component, or same component and strictly
    smaller column.  Addable and removable boundary nodes of a multipartition
    are totally ordered by this.
    """
    return a.l > b.l or (a.l == b.l and a.c < b.c)


# ---------------------------------------------------------------------------
# Partitions and multipartitions
# ---------------------------------------------------------------------------

Partition = tuple[int, ...]  # weakly decreasing positive parts, no zeros


def check_partition(parts: Iterable[int]) -> Partition:
    t = tuple(int(p) for p in parts if p != 0)
    if any(p < 0 for p in t):
        raise ValueError(f"negative part in {t}")
    if any(t[i] < t[i + 1] for i in range(len(t) - 1)):
        raise ValueError(f"parts not weakly decreasing: {t}")
    return t


def conjugate(mu: Partition) -> Partition:
    if not mu:
        return ()
    return tuple(sum(1 for p in mu if p >= c) for c in range(1, mu[0] + 1))


def col_length(mu: Partition, c: int) -> int:
    """Length of column c of mu (number of rows with at least c boxes)."""
    return sum(1 for p in mu if p >= c)


@dataclass(frozen=True)
class Multipartition:
    """An ell-tuple of partitions, the index of a Specht module."""

    components: tuple[Partition, ...]

    def __post_init__(self):
        if not self.components:
            raise ValueError("need at least one component")
        object.__setattr__(
            self, "components", tuple(check_partition(c) for c in self.components)
        )

    @property
    def level(self) -> int:
        return len(self.components)

    @property
    def size(self) -> int:
        return sum(sum(c) for c in self.components)

    def part(self, l: int, r: int) -> int:
        """Row length lambda^{(l)}_r (0 beyond the last row)."""
        comp = self.components[l - 1]
        return comp[r - 1] if r <= len(comp) else 0

    def length(self) -> int:
        return max((len(c) for c in self.components), default=0)

    def nodes(self) -> Iterator[Node]:
        for l, comp in enumerate(self.components, start=1):
            for r, row in enumerate(comp, start=1):
                for c in range(1, row + 1):
                    yield Node(l, r, c)

    def __contains__(self, node: Node) -> bool:
        l, r, c = node
        return 1 <= l <= self.level and 1 <= c <= self.part(l, r)

    def addable_nodes(self) -> list[Node]:
        out = []
        for l, comp in enumerate(self.components, start=1):
            for r in range(1, len(comp) + 2):
                prev = comp[r - 2] if r >= 2 else None
                here = comp[r - 1] if r <= len(comp) else 0
                if prev is None or here < prev:
                    out.append(Node(l, r, here + 1))
        return out

    def removable_nodes(self) -> list[Node]:
        out = []
        for l, comp in enumerate(self.components, start=1):
            for r, row in enumerate(comp, start=1):
                nxt = comp[r] if r < len(comp) else 0
                if row > nxt:
                    out.append(Node(l, r, row))
        return out

    def add_node(self, node: Node) -> "Multipartition":
        l, r, c = node
        comp = list(self.components[l - 1])
        if r == len(comp) + 1:
            comp.append(1)
        else:
            comp[r - 1] += 1
        comps = list(self.components)
        comps[l - 1] = tuple(comp)
        return Multipartition(tuple(comps))

    def remove_node(self, node: Node) -> "Multipartition":
        l, r, c = node
        comp = list(self.components[l - 1])
        comp[r - 1] -= 1
        comps = list(self.components)
        comps[l - 1] = check_partition(comp)
        return Multipartition(tuple(comps))

    # -- serialization ------------------------------------------------------

    def to_lists(self) -> list[list[int]]:
        return [list(c) for c in self.components]

    @staticmethod
    def from_lists(lists: Iterable[Iterable[int]]) -> "Multipartition":
        return Multipartition(tuple(tuple(c) for c in lists))

    def to_text(self) -> str:
        return "|".join(",".join(str(p) for p in c) if c else "-" for c in self.components)

    @staticmethod
    def from_text(text: str) -> "Multipartition":
        comps = []
        for chunk in text.split("|"):
            chunk = chunk.strip()
            if chunk in ("", "-", "0"):
                comps.append(())
            else:
                comps.append(tuple(int(p) for p in chunk.split(",")))
        return Multipartition(tuple(comps))

    def __repr__(self) -> str:
        return f"Multipartition({self.to_text()!r})"


def mp(*components) -> Multipartition:
    """Shorthand constructor: mp((3,2),(1,)) or mp((2,1)) at level 1."""
    return Multipartition(tuple(tuple(c) for c in components))


def _dominance_key(lam: Multipartition, depth: int) -> tuple[int, ...]:
    """Cumulative-sum vector whose ascending lex order refines dominance."""
    key = []
    before = 0
    for comp in lam.components:
        run = before
        for i in range(depth):
            run += comp[i] if i < len(comp) else 0
            key.append(run)
        before += sum(comp)
    return tuple(key)


def dominates(lam: Multipartition, mu: Multipartition) -> bool:
    """True iff lam dominance-dominates mu (lam >= mu)."""
    if lam.level != mu.level or lam.size != mu.size:
        raise ValueError("dominance needs equal level and size")
    depth = max(lam.length(), mu.length(), 1)
    ka = _dominance_key(lam, depth)
    kb = _dominance_key(mu, depth)
    return all(a >= b for a, b in zip(ka, kb))


def partitions_of(m: int) -> list[Partition]:
    """All partitions of m in a fixed order."""

    def rec(rest: int, mx: int) -> Iterator[tuple[int, ...]]:
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, mx), 0, -1):
            for tail in rec(rest - first, first):
                yield (first,) + tail

    return list(rec(m, m)) if m else [()]


@lru_cache(maxsize=None)
def enumerate_multipartitions(level: int, m: int) -> tuple[Multipartition, ...]:
    """All level-tuples of partitions of total size m, most dominant last."""
    if level < 1:
        raise ValueError("level must be >= 1")

    def splits(k: int, parts_left: int) -> Iterator[tuple[Partition, ...]]:
        if parts_left == 1:
            for p in partitions_of(k):
                yield (p,)
            return
        for head in range(k + 1):
            for p in partitions_of(head):
                for tail in splits(k - head, parts_left - 1):
                    yield (p,) + tail

    shapes = [Multipartition(c) for c in splits(m, level)]
    depth = max(m, 1)
    shapes.sort(key=lambda lam: _dominance_key(lam, depth))
    return tuple(shapes)


# ---------------------------------------------------------------------------
# Multicharges and contents
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Multicharge:
    """A separated integer lift kappa of the dominant weight, with e and n."""

    kappa: tuple[int, ...]
    e: int
    n: int

    def __post_init__(self):
        object.__setattr__(self, "kappa", tuple(int(k) for k in self.kappa))
        if self.e < 2:
            raise ValueError("e must be >= 2")
        if self.n < 0:
            raise ValueError("n must be >= 0")
        ks = self.kappa
        if not ks:
            raise ValueError("empty multicharge")
        for l in range(len(ks) - 1):
            if ks[l] < ks[l + 1] + 2 * self.n:
                raise ValueError(f"separation fails: {ks} with n={self.n}")
        if ks[-1] < self.n:
            raise ValueError(f"separation fails: kappa_ell={ks[-1]} < n={self.n}")

    @property
    def level(self) -> int:
        return len(self.kappa)

    def residues(self) -> tuple[int, ...]:
        return tuple(k % self.e for k in self.kappa)

    def content_spread(self) -> int:
        """An upper bound for max content - min content over P_{level,n}."""
        return self.kappa[0] + self.n - (self.kappa[-1] - self.n)


def canonical_multicharge(residues: Iterable[int], e: int, n: int) -> Multicharge:
    """The minimal separated lift of a residue multiset.

    The multiset is ordered decreasingly (a fixed deterministic choice);
    kappa_ell is the least integer >= n in its class and each kappa_l the
    least integer >= kappa_{l+1} + 2n in its class.
    """
    res = sorted((r % e for r in residues), reverse=True)
    if not res:
        raise ValueError("need at least one residue")
    kappa = [0] * len(res)
    lo = n
    for l in range(len(res) - 1, -1, -1):
        kappa[l] = lo + ((res[l] - lo) % e)
        lo = kappa[l] + 2 * n
    return Multicharge(tuple(kappa), e, n)


def content(node: Node, charge: Multicharge) -> int:
    return charge.kappa[node.l - 1] + node.c - node.r


def residue(node: Node, charge: Multicharge, f: int) -> int:
    if f < 2:
        raise ValueError("modulus must be >= 2")
    return content(node, charge) % f


def addable_removable(
    lam: Multipartition, i: int, charge: Multicharge, f: int
) -> tuple[tuple[Node, ...], tuple[Node, ...]]:
    """The sets Add_i and Rem_i of addable/removable nodes of residue i mod f."""
    i %= f
    add = tuple(a for a in lam.addable_nodes() if residue(a, charge, f) == i)
    rem = tuple(a for a in lam.removable_nodes() if residue(a, charge, f) == i)
    return add, rem


def d_node(lam: Multipartition, node: Node, f: int, charge: Multicharge) -> int:
    """d_{A,f}(lam): addables minus removables of A's residue after A in lex order."""
    i = residue(node, charge, f)
    add, rem = addable_removable(lam, i, charge, f)
    if node not in rem:
        raise ValueError(f"{node} is not a removable node of {lam} with residue {i}")
    return sum(1 for b in add if b > node) - sum(1 for b in rem if b > node)


# ---------------------------------------------------------------------------
# Charged beta numbers
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ChargedBetaSequence:
    """A strictly decreasing, block-shifted encoding of a multipartition.

    Entries of block l live in [kappa_l - n, kappa_l + n) whenever the parts
    of component l are at most n, which always holds in the Jantzen setting
    (multipartitions of size n).  Only the lower bound is demanded here, so
    that shapes with parts exceeding n still round-trip.
    """

    beta: tuple[int, ...]
    charge: Multicharge

    def __post_init__(self):
        object.__setattr__(self, "beta", tuple(int(b) for b in self.beta))
        ell, n = self.charge.level, self.charge.n
        if len(self.beta) != ell * n:
            raise ValueError("beta sequence has wrong length")
        for j in range(1, len(self.beta)):
            if self.beta[j - 1] <= self.beta[j]:
                raise ValueError("beta sequence not strictly decreasing")
        for l in range(1, ell + 1):
            block = self.beta[(l - 1) * n : l * n]
            k = self.charge.kappa[l - 1]
            if block and block[-1] < k - n:
                raise ValueError(f"beta {block[-1]} below window of block {l}")

    def in_windows(self) -> bool:
        n = self.charge.n
        return all(
            self.charge.kappa[l] - n <= b < self.charge.kappa[l] + n
            for l in range(self.charge.level)
            for b in self.beta[l * n : (l + 1) * n]
        )


def beta_sequence(lam: Multipartition, charge: Multicharge) -> ChargedBetaSequence:
    """beta_s = kappa_{l_s} + lambda^{(l_s)}_{r_s} - r_s, length level*n."""
    n = charge.n
    if lam.level != charge.level:
        raise ValueError("level mismatch")
    if lam.length() > n:
        raise ValueError(f"partition has more than n={n} rows")
    beta = []
    for l in range(1, lam.level + 1):
        k = charge.kappa[l - 1]
        for r in range(1, n + 1):
            beta.append(k + lam.part(l, r) - r)
    return ChargedBetaSequence(tuple(beta), charge)


def multipartition_from_beta(
    beta: Iterable[int], charge: Multicharge
) -> Multipartition:
    """Inverse of beta_sequence; raises on window violations."""
    seq = ChargedBetaSequence(tuple(beta), charge)
    n = charge.n
    comps = []
    for l in range(1, charge.level + 1):
        k = charge.kappa[l - 1]
        block = seq.beta[(l - 1) * n : l * n]
        comps.append(check_partition([b - k + r for r, b in enumerate(block, start=1)]))
    return Multipartition(tuple(comps))


def normalize_beta(
    beta: Iterable[int], charge: Multicharge
) -> Optional[tuple[Multipartition, int]]:
    """Sort an arbitrary sequence into a charged beta sequence, tracking sign.

    Returns (shape, (-1)^{L(w)}) for the sorting permutation w, or None if
    entries repeat or the sorted sequence violates a block window.
    """
    seq = tuple(int(b) for b in beta)
    n = charge.n
    if len(seq) != charge.level * n:
        raise ValueError("beta sequence has wrong length")
    if len(set(seq)) != len(seq):
        return None
    inversions = 0
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] < seq[j]:
                inversions += 1
    sorted_beta = tuple(sorted(seq, reverse=True))
    for l in range(charge.level):
        k = charge.kappa[l]
        if not all(k - n <= b < k + n for b in sorted_beta[l * n : (l + 1) * n]):
            return None
    return multipartition_from_beta(sorted_beta, charge), (-1) ** inversions


# ---------------------------------------------------------------------------
# Rim hooks and wrapping
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RimHook:
    """The rim hook of lam anchored at a node, with its classical statistics."""

    anchor: Node
    cells: frozenset[Node]
    hook_length: int
    leg_length: int
    foot: Node
    foot_row: int  # global row index n(l-1) + a of the anchor's row


def rim_hook(lam: Multipartition, alpha: Node, charge: Multicharge) -> RimHook:
    """The alpha-rim hook: boundary strip from alpha to the end of its column."""
    if alpha not in lam:
        raise ValueError(f"{alpha} is not a node of {lam}")
    l, a, b = alpha
    comp = lam.components[l - 1]
    col_len = col_length(comp, b)
    cells = set()
    for r in range(a, col_len + 1):
        for c in range(b, comp[a - 1] + 1):
            node = Node(l, r, c)
            if node in lam and Node(l, r + 1, c + 1) not in lam:
                cells.add(node)
    return RimHook(
        anchor=alpha,
        cells=frozenset(cells),
        hook_length=len(cells),
        leg_length=col_len - a,
        foot=Node(l, col_len, b),
        foot_row=charge.n * (l - 1) + a,
    )


def _hook_anchor_and_leg(cells: frozenset[Node]) -> tuple[Node, int]:
    rows = [c.r for c in cells]
    cols = [c.c for c in cells]
    l = next(iter(cells)).l
    return Node(l, min(rows), min(cols)), max(rows) - min(rows)


@dataclass(frozen=True)
class WrapResult:
    """Outcome of removing a rim hook and wrapping it back with foot in row t."""

    shape: Optional[Multipartition]  # None when the wrap is impossible
    sign: int  # epsilon_{alpha,t}; 0 when shape is None
    cohook_length: int  # h'_alpha = beta_s - beta_t - h_alpha
    hook_length: int
    leg: int  # leg of the removed hook
    wrapped_leg: Optional[int]  # leg of the hook wrapped at row t


def wrap_hook(
    lam: Multipartition, alpha: Node, t: int, charge: Multicharge
) -> WrapResult:
    """Remove the alpha-rim hook and wrap an equal-length hook with foot in row t.

    Realized on charged beta numbers: subtract h_alpha at position r_alpha,
    add it at position t, and normalize.  The sign is
    (-1)^{leg(removed) + leg(wrapped)}, which equals the sign of the sorting
    permutation of the moved beta sequence; the cross-route validation of the
    Jantzen characters pins this convention (it is the one that makes the
    classical sum formula agree with the Gram-determinant and degree routes
    on the whole desk-scale grid).
    """
    hook = rim_hook(lam, alpha, charge)
    ell_n = charge.level * charge.n
    if not (hook.foot_row + hook.leg_length < t <= ell_n):
        raise ValueError(f"t={t} out of range for anchor row {hook.foot_row}")
    beta = list(beta_sequence(lam, charge).beta)
    s = hook.foot_row
    h = hook.hook_length
    cohook = beta[s - 1] - beta[t - 1] - h
    beta[s - 1] -= h
    beta[t - 1] += h
    norm = normalize_beta(beta, charge)
    if norm is None:
        return WrapResult(None, 0, cohook, h, hook.leg_length, None)
    shape, _ = norm
    mu_cells = set(lam.nodes()) - set(hook.cells)
    new_cells = frozenset(set(shape.nodes()) - mu_cells)
    assert len(new_cells) == h, "beta wrap disagrees with diagram wrap"
    _, wrapped_leg = _hook_anchor_and_leg(new_cells)
    sign = (-1) ** (hook.leg_length + wrapped_leg)
    return WrapResult(shape, sign, cohook, h, hook.leg_length, wrapped_leg)
