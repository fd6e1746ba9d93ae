from fractions import Fraction as F

import pytest

from isojac.algebra.scalars import squarefree_part
from isojac.families import (
    ParameterExcluded,
    bending_curve,
    bending_obvious_dual,
    crst_curve,
    family1_internals,
    family1_pair,
    family2_construct,
    family2_excluded,
    family2_to_crst,
    galois_condition,
    gensimple_pair,
)
from isojac.ffverify import charpoly_match_up_to_twist, frobenius_charpoly
from isojac.igusa import geometrically_isomorphic


def test_family1_identities():
    assert all(family1_internals().values())
    assert all(family1_internals(F(3)).values())


@pytest.mark.parametrize("t", [0, 1, -1])
def test_family1_excluded(t):
    with pytest.raises(ParameterExcluded):
        family1_pair(F(t))


@pytest.mark.parametrize("t", [F(2), F(3), F(-5, 2)])
def test_family1_pairs_are_twins(t):
    fam = family1_pair(t)
    assert not geometrically_isomorphic(fam.C, fam.C_minus)
    for p in (11, 13, 17, 19, 23):
        try:
            a, b = frobenius_charpoly(fam.C, p), frobenius_charpoly(fam.C_minus, p)
        except ValueError:
            continue
        assert charpoly_match_up_to_twist(a, b, 1)


@pytest.mark.parametrize("v", [0, 1, 4])
def test_family2_excluded(v):
    assert family2_excluded(F(v))
    with pytest.raises(ParameterExcluded):
        family2_construct(F(v))


@pytest.mark.parametrize("v", [F(2), F(-4, 3), F(6), F(3)])
def test_family2_duals_agree_up_to_twist(v):
    fam = family2_construct(v)
    m = squarefree_part(fam.splitting_disc)
    assert not geometrically_isomorphic(fam.C.dual, fam.C_prime.dual)
    checked = 0
    for p in (11, 13, 17, 19, 23, 29, 31, 37, 41, 43):
        if (2 * m) % p == 0:
            continue
        try:
            a, b = frobenius_charpoly(fam.C.dual, p), frobenius_charpoly(fam.C_prime.dual, p)
        except ValueError:
            continue
        assert charpoly_match_up_to_twist(a, b, m)
        checked += 1
    assert checked >= 4


def test_family2_maps_to_crst():
    v = F(2)
    r, s, t = family2_to_crst(v)
    assert (s, t) == (v / 4, (v - 4) / 4)
    assert galois_condition(r, s, t).holds


@pytest.mark.parametrize("s,t", [(0, 2), (1, 2), (2, 1)])
def test_crst_excluded(s, t):
    with pytest.raises(ParameterExcluded):
        crst_curve(F(1), F(s), F(t))


def test_galois_condition_fails_generically():
    assert not galois_condition(F(1), F(2), F(3)).holds
    with pytest.raises(ParameterExcluded):
        gensimple_pair(F(1), F(2), F(3))


def test_gensimple_pair_of_8_4_triple():
    pair = gensimple_pair(F(-7, 4), F(1, 2), F(1, 4))
    assert squarefree_part(pair.splitting_disc) == 2
    assert not geometrically_isomorphic(pair.dual.dual, pair.dual_prime.dual)


def test_bending_construction():
    bp = bending_curve(F(1), F(1), F(0), F(1))
    res = bending_obvious_dual(bp)
    fd1, fd2 = frobenius_charpoly(bp.curve, 13), frobenius_charpoly(res.dual, 13)
    assert fd1.coeffs == fd2.coeffs
    with pytest.raises(ParameterExcluded):
        bending_curve(F(1), F(0), F(0), F(1))
