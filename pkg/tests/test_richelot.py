from fractions import Fraction as F

import pytest

from isojac.algebra.poly import Poly
from isojac.examples import EX85, EX85_MAPS
from isojac.families import gensimple_pair
from isojac.igusa import geometrically_isomorphic
from isojac.richelot import (
    GEOMETRIC_KERNEL_COUNT,
    CurveError,
    DegenerateFactorization,
    DegenerateMap,
    Genus2Curve,
    QuadFactorization,
    complete_square_form,
    enumerate_kernels,
    factorization_from_pairing,
    find_mobius,
    is_galois_stable,
    mobius_transform,
    perfect_matchings,
    richelot_determinant,
    richelot_dual,
)


def _split_curve():
    roots = [F(r) for r in (-3, -1, 0, 1, 2, 4)]
    return roots, Genus2Curve(F(1), Poly.from_roots(roots))


def test_curve_validation():
    with pytest.raises(CurveError):
        Genus2Curve(F(1), Poly([F(1), F(0), F(1)]))
    with pytest.raises(CurveError):
        Genus2Curve(F(1), Poly.from_roots([F(1), F(1), F(2), F(3), F(4), F(5)]))
    with pytest.raises(CurveError):
        Genus2Curve(F(0), Poly.from_roots([F(i) for i in range(6)]))


def test_curve_json_roundtrip():
    _, c = _split_curve()
    assert Genus2Curve.from_json(c.to_json()) == c


def test_fifteen_kernels_for_split_sextic():
    _, c = _split_curve()
    assert GEOMETRIC_KERNEL_COUNT == 15 == len(perfect_matchings(range(6)))
    assert len(enumerate_kernels(c)) == 15


def test_conjugate_pair_limits_rational_kernels():
    # sqrt(2) and -sqrt(2) must share a quadratic, leaving the 3 matchings of four rational roots
    f = Poly([F(-2), F(0), F(1)]) * Poly.from_roots([F(1), F(2), F(3), F(4)])
    assert len(enumerate_kernels(Genus2Curve(F(1), f))) == 3


def test_dual_is_isogenous_and_double_dual_returns():
    roots, c = _split_curve()
    fact = factorization_from_pairing(roots, ((0, 1), (2, 3), (4, 5)))
    res = richelot_dual(c, fact)
    assert res.d_in_base and res.d == richelot_determinant(fact.g)
    back = richelot_dual(res.dual, QuadFactorization(tuple(h.monic() for h in res.h)))
    assert geometrically_isomorphic(back.dual, c)


def test_degenerate_determinant_rejected():
    g1 = Poly([F(-1), F(0), F(1)])
    g2 = Poly([F(-4), F(0), F(1)])
    g3 = Poly([F(-9), F(0), F(1)])  # all even: the determinant vanishes
    c = Genus2Curve(F(1), g1 * g2 * g3)
    with pytest.raises(DegenerateFactorization):
        richelot_dual(c, QuadFactorization((g1, g2, g3)))


def test_wrong_factorization_rejected():
    roots, c = _split_curve()
    g = (Poly([F(1), F(0), F(1)]),) * 3
    with pytest.raises(CurveError):
        richelot_dual(c, QuadFactorization(g))


def test_galois_stability_over_q():
    roots, _ = _split_curve()
    fact = factorization_from_pairing(roots, ((0, 1), (2, 3), (4, 5)))
    assert is_galois_stable(fact.g)


def test_mobius_transform_rules():
    _, c = _split_curve()
    with pytest.raises(DegenerateMap):
        mobius_transform(c, (1, 2, 2, 4))
    same = mobius_transform(c, (1, 0, 0, 1))
    assert same == c
    tw = mobius_transform(c, (1, 0, 0, 1), F(4))
    assert tw.delta == 1 and tw.f == c.f * 4


def test_complete_square_form_roundtrip():
    _, c = _split_curve()
    q = Poly([F(0), F(1), F(1), F(1)])
    model = complete_square_form(c, q)
    assert model.to_curve() == c


def test_find_mobius_recovers_published_map():
    pair = gensimple_pair(F(-19, 3), F(-6), F(-1, 6))
    src = pair.dual.literal_model()
    match = find_mobius(src, EX85[0])
    assert match is not None
    assert mobius_transform(src, match.mp, match.scale, match.twist) == EX85[0]
    mp, scale, twist = EX85_MAPS[0]
    assert mobius_transform(src, mp, scale, twist) == EX85[0]


def test_find_mobius_none_for_unrelated_curves():
    _, c = _split_curve()
    other = Genus2Curve(F(1), Poly.from_roots([F(r) for r in (-5, -2, 0, 3, 7, 11)]))
    assert find_mobius(c, other, max_primes=8) is None
