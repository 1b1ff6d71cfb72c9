import pytest
from hypothesis import given, settings, strategies as st

from jantzen.combinat import Multicharge, canonical_multicharge, enumerate_multipartitions, mp
from jantzen.gamma import (
    PhiFactorization,
    QIntProduct,
    degree_factorization,
    gamma_all,
    gamma_closed,
    gamma_initial,
    gamma_step,
    gram_det_factors,
    phi_exponents,
)
from jantzen.ring import ValuationContext
from jantzen.tableaux import residue_sequence, standard_tableaux


def test_qint_product_normalization():
    one = QIntProduct.one()
    assert one.times_qint(5).factors == ((5, 1),)
    assert one.times_qint(1).factors == ()
    neg = one.times_qint(-3)
    assert neg.sign == -1 and neg.z_exp == -3 and neg.factors == ((3, 1),)
    sq = one.times_qint(-3, 2)
    assert sq.sign == 1 and sq.z_exp == -6 and sq.factors == ((3, 2),)
    with pytest.raises(ValueError):
        one.times_qint(0)


def test_gamma_step_normalization():
    g = gamma_step(QIntProduct.one(), 2)
    # [3] * [-1] / [2]^2 = -z^{-1} [3] [2]^{-2}
    assert g.sign == -1
    assert g.factors == ((2, -2), (3, 1))
    with pytest.raises(ValueError):
        gamma_step(QIntProduct.one(), 0)
    with pytest.raises(ValueError):
        gamma_step(QIntProduct.one(), 1)


def test_gamma_initial_level1():
    ch = Multicharge((5,), 2, 5)
    assert gamma_initial(mp((1,)), ch).factors == ()
    assert gamma_initial(mp((2,)), ch).factors == ((2, 1),)
    assert gamma_initial(mp((3, 2)), ch).factors == ((2, 2), (3, 1))


def test_gamma_initial_cross_component():
    ch = Multicharge((6, 2), 2, 2)
    g = gamma_initial(mp((1,), (1,)), ch)
    # the (1,1,1) node contributes z^{kappa_2} [kappa_1 - kappa_2]
    assert g.factors == ((4, 1),)
    assert g.z_exp == 2


def test_phi_exponents():
    g = QIntProduct.one().times_qint(6)
    assert phi_exponents(g).as_dict() == {2: 1, 3: 1, 6: 1}
    assert phi_exponents(QIntProduct.one()).as_dict() == {}
    g = QIntProduct.one().times_qint(4).times_qint(2, -1)
    assert phi_exponents(g).as_dict() == {4: 1}


TRIPLE_GRID = [
    (1, 4, [0]),
    (2, 3, [0, 0]),
    (2, 3, [0, 2]),
]


@pytest.mark.parametrize("level,m,res", TRIPLE_GRID)
def test_gamma_triple_consistency(level, m, res):
    """Recurrence, closed form and degree factorization agree as Phi-maps."""
    ch = canonical_multicharge(res, 3, m)
    for lam in enumerate_multipartitions(level, m):
        gammas = gamma_all(lam, ch)
        for t in standard_tableaux(lam):
            via_rec = phi_exponents(gammas[t])
            via_closed = phi_exponents(gamma_closed(t, ch))
            via_degree = degree_factorization(t, ch)
            assert via_rec == via_closed == via_degree, (lam, t)


def test_gamma_recurrence_matches_closed_factors():
    ch = canonical_multicharge([0], 2, 5)
    lam = mp((3, 2))
    gammas = gamma_all(lam, ch)
    for t, g in gammas.items():
        assert g.same_factors(gamma_closed(t, ch)), t


def test_gram_det_factors_empty_class_is_one():
    ch = canonical_multicharge([0], 2, 3)
    out = gram_det_factors(mp((3,)), (0, 0, 0), ch)
    assert out == QIntProduct.one()


def test_gram_det_regrouping():
    # product over all residue classes equals product of all gammas
    ch = canonical_multicharge([0, 1], 2, 3)
    for lam in enumerate_multipartitions(2, 3):
        total = QIntProduct.one()
        seen = set()
        for t in standard_tableaux(lam):
            seen.add(residue_sequence(t, ch, 2))
        for i in seen:
            total = total * gram_det_factors(lam, i, ch)
        direct = QIntProduct.one()
        for g in gamma_all(lam, ch).values():
            direct = direct * g
        assert total == direct


def test_gram_det_valuation_nonnegative():
    for e, p in [(2, 0), (3, 0), (2, 2), (3, 2)]:
        ctx = ValuationContext(e, p)
        ch = canonical_multicharge([0], e, 4)
        for lam in enumerate_multipartitions(1, 4):
            classes = {residue_sequence(t, ch, e) for t in standard_tableaux(lam)}
            for i in classes:
                assert gram_det_factors(lam, i, ch).valuation(ctx) >= 0


def test_phi_factorization_serialization():
    pf = PhiFactorization.from_map({3: 2, 2: -1})
    assert pf.to_pairs() == [[2, -1], [3, 2]]
    assert pf.exponent(3) == 2 and pf.exponent(5) == 0
