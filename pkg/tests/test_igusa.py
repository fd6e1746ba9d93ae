from fractions import Fraction as F

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from isojac.algebra.poly import Poly
from isojac.algebra.scalars import GF, Fp
from isojac.families import family1_pair
from isojac.igusa import (
    geometrically_isomorphic,
    igusa_clebsch_from_roots,
    igusa_clebsch_of_sextic,
    igusa_invariants,
    igusa_of_sextic,
    r_polynomials,
    same_weighted_point,
)
from isojac.richelot import Genus2Curve


@settings(max_examples=25)
@given(st.lists(st.integers(-6, 6), min_size=6, max_size=6, unique=True), st.integers(1, 4))
def test_transvectant_route_matches_root_formula(roots, lead):
    rs = [F(r) for r in roots]
    f = Poly.from_roots(rs, F(lead))
    I_roots = igusa_clebsch_from_roots(F(lead), rs)
    I_trans = igusa_clebsch_of_sextic(f)
    assert same_weighted_point(I_roots, I_trans, (1, 2, 3, 5))


@settings(max_examples=25)
@given(st.lists(st.integers(-5, 5), min_size=7, max_size=7))
def test_syzygy(cs):
    assume(cs[6])
    f = Poly([F(c) for c in cs])
    assume(f.is_squarefree())
    assert igusa_of_sextic(f).syzygy_holds()


def test_weighted_projective_equality():
    u = (F(1), F(2), F(3), F(4), F(5))
    lam = F(3, 2)
    v = tuple(x * lam ** (i + 1) for i, x in enumerate(u))
    assert same_weighted_point(u, v)
    assert not same_weighted_point(u, (F(1), F(2), F(3), F(4), F(6)))
    assert not same_weighted_point((F(0), F(1), F(1), F(1), F(1)), (F(1), F(1), F(1), F(1), F(1)))


def test_twist_does_not_change_igusa_class():
    f = Poly([F(1), F(2), F(0), F(-1), F(3), F(0), F(1)])
    assert geometrically_isomorphic(Genus2Curve(F(1), f), Genus2Curve(F(7), f))


def test_quintic_is_supported():
    f = Poly([F(1), F(0), F(2), F(0), F(0), F(1)])
    assert igusa_invariants(Genus2Curve(F(1), f)).syzygy_holds()


def test_finite_field_invariants_match_reduction():
    f = Poly([F(1), F(2), F(0), F(-1), F(3), F(0), F(1)])
    J = igusa_of_sextic(f)
    Jp = igusa_of_sextic(f.map(lambda c: Fp(c, 13)))
    assert all(Fp(a, 13) == b for a, b in zip(J, Jp))


def test_characteristic_two_rejected():
    with pytest.raises(ValueError):
        GF(2, 1)


def test_family1_pair_distinct_at_t2():
    fam = family1_pair(F(2))
    assert not geometrically_isomorphic(fam.C, fam.C_minus)


def test_r_polynomials_degrees():
    R = r_polynomials()
    assert (R["R2"].degree(), R["R3"].degree(), R["R5"].degree()) == (16, 24, 40)
