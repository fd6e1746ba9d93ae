from fractions import Fraction as F

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from isojac.algebra.poly import Poly
from isojac.ffverify import (
    BadReduction,
    FrobeniusData,
    absolutely_simple_sufficient,
    charpoly_match_up_to_twist,
    count_hyperelliptic,
    count_points,
    count_points_naive,
    count_quartic_even,
    count_quartic_general,
    flip_sign,
    frobenius_charpoly,
    is_good_prime,
    weil_bound_ok,
    weil_poly_from_counts,
)
from isojac.genus3 import PlaneQuartic, genus3_pair
from isojac.richelot import Genus2Curve

curve_coeffs = st.lists(st.integers(-9, 9), min_size=6, max_size=9)


@settings(max_examples=30)
@given(curve_coeffs, st.integers(1, 6), st.sampled_from([5, 7, 9, 11, 25]))
def test_hyperelliptic_count_matches_naive(cs, delta, q):
    f = Poly([F(c) for c in cs])
    try:
        fast = count_hyperelliptic(delta, f, q)
    except BadReduction:
        assume(False)
    assert fast == count_points_naive(delta, f, q)


def test_bad_reduction_detected():
    f = Poly([F(0), F(0), F(1), F(0), F(0), F(0), F(1)])  # x^2 (x^4 + 1)
    with pytest.raises(BadReduction):
        count_hyperelliptic(1, f, 7)
    assert not is_good_prime(Genus2Curve(F(1), Poly([F(3), F(3), F(0), F(0), F(0), F(0), F(1)])), 3)  # x^6 mod 3


def test_degree_drop_by_one_is_allowed():
    f = Poly([F(1), F(1), F(1), F(0), F(1), F(1), F(7)])  # leading 7 vanishes mod 7
    for q in (7, 49):
        assert count_hyperelliptic(1, f, q) == count_points_naive(1, f, q)


def test_weil_polynomial_of_family2_at_13():
    from isojac.families import family2_construct

    fd = frobenius_charpoly(family2_construct(F(2)).D, 13)
    assert fd.coeffs == (169, -52, 22, -4, 1)
    assert fd.functional_equation_holds()
    assert absolutely_simple_sufficient(fd) == "proven_simple"
    assert FrobeniusData.from_json(fd.to_json()) == fd


def test_weil_poly_from_counts_elliptic_square():
    # E x E with a_p = 0 at p = 7: L(T) = (1 + 7 T^2)^2, N_1 = 8 * ... counts of the product curve are not needed
    p = 7
    coeffs = weil_poly_from_counts(p, [8, 64])
    assert coeffs[-1] == 1 and coeffs[0] == p * p


def test_split_jacobian_is_inconclusive():
    # (T^2 - a T + p)^2 is reducible, so simplicity cannot be certified
    p, a = 13, 2
    quad = (p, -a, 1)
    prod = [0] * 5
    for i, x in enumerate(quad):
        for j, y in enumerate(quad):
            prod[i + j] += x * y
    assert absolutely_simple_sufficient(FrobeniusData(p, tuple(prod), ())) == "inconclusive"


def test_twist_matching():
    a = FrobeniusData(13, (169, -52, 22, -4, 1), ())
    b = FrobeniusData(13, flip_sign(a.coeffs), ())
    assert charpoly_match_up_to_twist(a, a, 1)
    assert charpoly_match_up_to_twist(a, b, 2)  # 2 is not a square mod 13
    assert not charpoly_match_up_to_twist(a, b, 3)  # 3 is a square mod 13
    with pytest.raises(ValueError):
        charpoly_match_up_to_twist(a, a, 13)


def test_quartic_counts_agree():
    Q = genus3_pair(1).Q
    for q in (11, 13, 17):
        assert count_quartic_even(Q.coeffs, q) == count_quartic_general(Q.coeffs, q)
    generic = PlaneQuartic({(4, 0, 0): F(1), (0, 4, 0): F(1), (0, 0, 4): F(1), (1, 1, 2): F(1), (3, 1, 0): F(2)})
    n = count_points(generic, 7)
    assert weil_bound_ok(n, 7, 3)


def test_weil_bounds_for_random_curves():
    f = Poly([F(c) for c in (3, -1, 4, 1, -5, 9, 2)])
    for p in (11, 13, 17, 19):
        if is_good_prime(Genus2Curve(F(1), f), p):
            for k in (1, 2):
                assert weil_bound_ok(count_hyperelliptic(1, f, p**k), p**k, 2)
