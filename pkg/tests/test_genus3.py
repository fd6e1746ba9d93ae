from fractions import Fraction as F

import pytest

from isojac.algebra.resultant import discriminant
from isojac.families import ParameterExcluded
from isojac.genus3 import (
    PUBLISHED_PARAM_T1,
    HyperellipticModel,
    PlaneQuartic,
    elliptic_lpolys,
    find_conic_point,
    genus3_pair,
    hyperelliptic_octic_model,
    parametrize_conic,
    quartic_is_smooth_mod_p,
    symbolic_checks,
    verify_genus3_lpoly,
)


def test_symbolic_identities():
    assert all(symbolic_checks().values())


@pytest.mark.parametrize("t", [0, -1])
def test_excluded(t):
    with pytest.raises(ParameterExcluded):
        genus3_pair(F(t))


def test_conic_point_and_parametrization():
    coeffs = (F(-1), F(2), F(2))
    pt = find_conic_point(coeffs)
    assert sum(c * x * x for c, x in zip(coeffs, pt)) == 0
    X, Y, Z = parametrize_conic(coeffs, pt)
    assert (X * X * coeffs[0] + Y * Y * coeffs[1] + Z * Z * coeffs[2]).is_zero()


def test_octic_model_at_t1():
    octic = hyperelliptic_octic_model(1, param=PUBLISHED_PARAM_T1)
    assert octic.delta == 3
    assert discriminant(octic.f) == F(2) ** 94
    assert HyperellipticModel.from_json(octic.to_json()) == octic


def test_quartic_json_roundtrip():
    Q = genus3_pair(1).Q
    assert PlaneQuartic.from_json(Q.to_json()) == Q
    assert quartic_is_smooth_mod_p(Q, 11)


@pytest.mark.parametrize("p", [11, 13, 17])
def test_lpolys_agree_at_t1(p):
    v = verify_genus3_lpoly(1, p)
    assert v.holds


def test_generic_conic_octic_has_same_lpoly():
    generic = hyperelliptic_octic_model(1)
    for p in (11, 13):
        assert verify_genus3_lpoly(1, p, octic=generic).holds


def test_other_parameter():
    t = F(2)
    pair = genus3_pair(t)
    for p in (11, 13):
        if quartic_is_smooth_mod_p(pair.Q, p):
            assert verify_genus3_lpoly(t, p, use_octic=False).holds
    assert len(elliptic_lpolys(pair, 13)) == 3
