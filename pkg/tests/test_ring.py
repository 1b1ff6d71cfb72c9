from hypothesis import given, strategies as st
import pytest

from jantzen.ring import (
    LaurentPoly,
    ValuationContext,
    cyclotomic,
    divisors,
    ff_valuation_oracle,
    nu_phi,
    nu_quantum,
    poly_mul,
    quantum_integer,
)


laurents = st.dictionaries(st.integers(-6, 6), st.integers(-9, 9), max_size=6).map(LaurentPoly)


def test_quantum_integer_basics():
    assert quantum_integer(0).is_zero()
    assert quantum_integer(5) == LaurentPoly({0: 1, 1: 1, 2: 1, 3: 1, 4: 1})
    # [k]_1 = k and [-k] = -v^{-k} [k] pin the negative case: [-2] = -v^{-1} - v^{-2}.
    assert quantum_integer(-2) == LaurentPoly({-1: -1, -2: -1})
    for k in range(-7, 8):
        assert quantum_integer(k).eval_at_one() == k
        assert quantum_integer(-k) == LaurentPoly({-k: -1}) * quantum_integer(k)


def test_bar_and_derivative():
    p = LaurentPoly({1: 1, 3: 2})
    assert p.bar() == LaurentPoly({-1: 1, -3: 2})
    assert p.bar().bar() == p
    assert LaurentPoly({0: 3}).bar() == LaurentPoly({0: 3})
    assert LaurentPoly({2: 1}).derivative_at_one() == 2
    assert LaurentPoly({0: 7}).derivative_at_one() == 0
    assert (LaurentPoly({1: 1, -1: 1})).derivative_at_one() == 0


def test_positive_part():
    g = LaurentPoly({2: 1, -2: -1})
    assert g.positive_part() == LaurentPoly({2: 1})
    assert LaurentPoly().positive_part().is_zero()
    g = LaurentPoly({1: 2, -1: -2, 3: 1, -3: -1})
    assert g.positive_part() == LaurentPoly({1: 2, 3: 1})
    with pytest.raises(ValueError):
        LaurentPoly({1: 1}).positive_part()


@given(laurents)
def test_bar_involutive(p):
    assert p.bar().bar() == p


@given(laurents)
def test_bar_invariant_has_zero_derivative(p):
    sym = p + p.bar()
    assert sym.derivative_at_one() == 0


@given(laurents)
def test_positive_part_reconstructs(p):
    g = p - p.bar()
    d = g.positive_part()
    assert d - d.bar() == g


@given(laurents, laurents)
def test_serialization_roundtrip(p, q):
    assert LaurentPoly.from_pairs(p.to_pairs()) == p
    assert (p * q).to_pairs() == (q * p).to_pairs()


def test_cyclotomic_small():
    assert cyclotomic(1) == (-1, 1)
    assert cyclotomic(2) == (1, 1)
    assert cyclotomic(3) == (1, 1, 1)
    assert cyclotomic(6) == (1, -1, 1)
    assert cyclotomic(12) == (1, 0, -1, 0, 1)


def test_cyclotomic_product_identity():
    for f in range(1, 65):
        prod = (1,)
        for d in divisors(f):
            prod = poly_mul(prod, cyclotomic(d))
        expect = [0] * (f + 1)
        expect[0], expect[f] = -1, 1
        assert prod == tuple(expect)


def test_quantum_integer_cyclotomic_factorisation():
    for f in range(1, 65):
        prod = (1,)
        for d in divisors(f):
            if d > 1:
                prod = poly_mul(prod, cyclotomic(d))
        qi = quantum_integer(f)
        assert prod == tuple(qi.coeff(e) for e in range(f)) or f == 0


def test_valuation_context_validation():
    ValuationContext(2, 0)
    ValuationContext(3, 2)
    ValuationContext(2, 2)
    with pytest.raises(ValueError):
        ValuationContext(4, 2)
    with pytest.raises(ValueError):
        ValuationContext(6, 3)
    with pytest.raises(ValueError):
        ValuationContext(1, 0)


def test_nu_phi_char_zero():
    for e in (2, 3, 4, 6):
        ctx = ValuationContext(e, 0)
        for f in range(2, 41):
            assert nu_phi(f, ctx) == (1 if f == e else 0)


def test_nu_phi_paper_values():
    assert nu_phi(3, ValuationContext(3, 0)) == 1
    assert nu_phi(6, ValuationContext(3, 2)) == 1
    assert nu_phi(5, ValuationContext(3, 2)) == 0
    assert nu_phi(12, ValuationContext(3, 2)) == 2


def test_nu_quantum():
    ctx = ValuationContext(3, 2)
    assert nu_quantum(1, ctx) == 0
    assert nu_quantum(12, ctx) == 4  # nu(Phi_3) + nu(Phi_6) + nu(Phi_12) = 1 + 1 + 2
    assert nu_quantum(12, ValuationContext(3, 0)) == 1


def test_oracle_degenerate_cases():
    # Phi_2(x+1) = x mod 2, Phi_4(x+1) = x^2 + 2x + 2 = x^2 mod 2.
    assert ff_valuation_oracle(2, ValuationContext(2, 2)) == 1
    assert ff_valuation_oracle(4, ValuationContext(2, 2)) == 2
    assert nu_phi(4, ValuationContext(2, 2)) == 2
    # e = p = 3: Phi_3(1+x) = x^2 + 3x + 3 = x^2 mod 3.
    assert ff_valuation_oracle(3, ValuationContext(3, 3)) == 2
    assert nu_phi(3, ValuationContext(3, 3)) == 2


VALID_GRID = [
    (e, p)
    for e in (2, 3, 4, 6)
    for p in (2, 3, 5)
    if p == 0 or e == p or __import__("math").gcd(e, p) == 1
]


@pytest.mark.parametrize("e,p", VALID_GRID)
def test_nu_phi_agrees_with_oracle(e, p):
    ctx = ValuationContext(e, p)
    for f in range(2, 41):
        assert nu_phi(f, ctx) == ff_valuation_oracle(f, ctx), (e, p, f)
