import pytest
from hypothesis import given, settings, strategies as st

from jantzen.characters import (
    CharacterVector,
    branching_check,
    graded_specht_character,
    reduce_residues,
    ungraded_specht_character,
)
from jantzen.combinat import Multicharge, canonical_multicharge, enumerate_multipartitions, mp
from jantzen.ring import LaurentPoly
from jantzen.tableaux import standard_tableaux


def test_graded_specht_character_small():
    ch = Multicharge((2,), 2, 2)
    v = graded_specht_character(mp((2,)), ch, 2)
    assert v.as_dict() == {(0, 1): LaurentPoly.monomial(1)}
    v = graded_specht_character(mp((1, 1)), ch, 2)
    assert v.as_dict() == {(0, 1): LaurentPoly.one()}


def test_ungraded_view_counts_tableaux():
    ch = canonical_multicharge([0, 2], 3, 4)
    for lam in enumerate_multipartitions(2, 4):
        v = graded_specht_character(lam, ch, 3)
        assert sum(v.ungraded().values()) == len(standard_tableaux(lam))
        assert v.ungraded() == ungraded_specht_character(lam, ch, 3)


def test_bar_character():
    ch = Multicharge((2,), 2, 2)
    v = graded_specht_character(mp((2,)), ch, 2)
    assert v.bar().as_dict() == {(0, 1): LaurentPoly.monomial(-1)}
    assert v.bar().bar() == v


def test_reduce_residues():
    v = CharacterVector.build(4, {(0, 1, 2, 3): LaurentPoly.one()})
    r = reduce_residues(v, 2)
    assert r.as_dict() == {(0, 1, 0, 1): LaurentPoly.one()}
    assert reduce_residues(v, 4) == v
    with pytest.raises(ValueError):
        reduce_residues(v, 3)
    # collisions add up
    v = CharacterVector.build(
        4, {(0, 2): LaurentPoly.one(), (2, 0): LaurentPoly.one(), (0, 0): LaurentPoly.one()}
    )
    assert reduce_residues(v, 2).as_dict() == {(0, 0): LaurentPoly({0: 3})}


def test_partial():
    v = CharacterVector.build(2, {(0, 1): LaurentPoly({1: 1, -1: 1})})
    assert v.partial().is_zero()
    v = CharacterVector.build(2, {(0, 1): LaurentPoly.monomial(1)})
    assert v.partial().int_entries() == {(0, 1): 1}


def test_partial_commutes_with_reduction():
    ch = canonical_multicharge([0], 4, 4)
    for lam in enumerate_multipartitions(1, 4):
        v = graded_specht_character(lam, ch, 4)
        assert reduce_residues(v.partial(), 2) == reduce_residues(v, 2).partial()
        assert reduce_residues(v, 2).ungraded() == {
            k: v2
            for k, v2 in _push(v.ungraded(), 2).items()
        }


def _push(m, e):
    out = {}
    for k, c in m.items():
        key = tuple(x % e for x in k)
        out[key] = out.get(key, 0) + c
    return {k: v for k, v in out.items() if v}


def test_branching_small():
    ch = Multicharge((3,), 3, 3)
    assert branching_check(mp((1,)), ch, 3)
    assert branching_check(mp((2, 1)), ch, 3)


@given(st.data())
@settings(max_examples=40, deadline=None)
def test_branching_exhaustive_sample(data):
    level = data.draw(st.integers(1, 2))
    m = data.draw(st.integers(1, 5))
    e = data.draw(st.sampled_from([2, 3]))
    lam = data.draw(st.sampled_from(list(enumerate_multipartitions(level, m))))
    ch = canonical_multicharge([0] * level, e, m)
    assert branching_check(lam, ch, e)


def test_character_json_roundtrip():
    ch = canonical_multicharge([0, 2], 3, 3)
    v = graded_specht_character(mp((2,), (1,)), ch, 3)
    assert CharacterVector.from_json(v.to_json()) == v
