from fractions import Fraction as F

import pytest

from isojac.families import ParameterExcluded, galois_condition
from isojac.surface import (
    INFINITY,
    OffCurve,
    SurfacePoint,
    P_nontorsion_witness,
    ec_group_law,
    ec_multiple,
    iso_E_to_F,
    iso_F_to_E,
    on_F,
    point_P,
    point_T,
    surface_identity_checks,
    rational_curve_fixtures,
    surface_E,
    surface_triple,
    translated_model_s2,
    triple_from_fixture,
    verify_rational_curves,
)


def test_surface_identities():
    assert all(surface_identity_checks().values())


def test_group_law_associative_at_s_half():
    s = F(1, 2)
    E = surface_E(s)
    P, T = point_P(s), point_T(s)
    Q = ec_multiple(E, P, 2)
    assert ec_group_law(E, ec_group_law(E, P, Q), T) == ec_group_law(E, P, ec_group_law(E, Q, T))
    assert ec_group_law(E, P, -P) == INFINITY
    assert ec_multiple(E, P, -2) == -Q


def test_off_curve_rejected():
    E = surface_E(F(1, 2))
    with pytest.raises(OffCurve):
        ec_group_law(E, SurfacePoint(F(1), F(1)), INFINITY)


def test_iso_roundtrip_on_multiples():
    s = F(5, 4)
    E = surface_E(s)
    for n in (1, 2, 3):
        Q = ec_multiple(E, point_P(s), n)
        u, z = iso_E_to_F(s, Q)
        assert on_F(s, u, z)
        assert iso_F_to_E(s, (u, z)) == Q


def test_s2_model_and_nontorsion():
    E, P = translated_model_s2()
    assert (E.a2, E.a4, E.a6) == (0, 0, -13824)
    assert P == SurfacePoint(F(40), F(-224))
    assert P_nontorsion_witness(12)


def test_fixtures_hold_and_negated_control_fails():
    assert all(verify_rational_curves().values())
    fx = rational_curve_fixtures()
    s, u, z = fx["s=5/4"]
    bad = {"perturbed": (s, u + 1, z)}
    assert not any(verify_rational_curves(bad).values())


def test_fixture_triple_satisfies_galois_condition():
    r, s, t = triple_from_fixture("s=-1", 2)
    assert (r, s, t) == (-10, -1, -2)
    g = galois_condition(r, s, t)
    assert g.holds and g.shortcut_holds and g.shortcut_value == 11664


@pytest.mark.parametrize("s0,n,addT", [(F(1, 2), 1, False), (F(1, 3), 2, True), (F(-1), 2, False), (F(3, 2), 1, True)])
def test_surface_triples_satisfy_galois_condition(s0, n, addT):
    tr = surface_triple(s0, n, addT)
    assert tr.t == tr.s - 1
    g = galois_condition(tr.r, tr.s, tr.t)
    assert g.holds and g.shortcut_holds
    assert tr.to_json()["origin"] == {"s0": str(s0), "n": n, "addT": addT}


@pytest.mark.parametrize("s0,addT", [(F(1, 4), False), (F(0), False), (F(-1), True)])
def test_surface_triple_exclusions(s0, addT):
    with pytest.raises(ParameterExcluded):
        surface_triple(s0, 1, addT)
