"""Property suites: Richelot duals, Igusa invariance, double duals, étale squareness."""

from fractions import Fraction

from hypothesis import assume, given, settings
from hypothesis import strategies as st
from sympy import primerange

from isojac.algebra.etale import EtaleAlgebra, is_square_in_etale, is_square_mod_p
from isojac.algebra.factor import is_irreducible
from isojac.algebra.poly import Poly
from isojac.algebra.resultant import discriminant
from isojac.algebra.scalars import Fp
from isojac.ffverify import frobenius_charpoly
from isojac.igusa import geometrically_isomorphic
from isojac.richelot import (
    CurveError,
    DegenerateMap,
    Genus2Curve,
    QuadFactorization,
    factorization_from_pairing,
    mobius_transform,
    richelot_dual,
)

P13 = 13
f13 = st.integers(0, P13 - 1)
monic_quadratic_13 = st.tuples(f13, f13).map(lambda bc: Poly([Fp(bc[1], P13), Fp(bc[0], P13), Fp(1, P13)]))


@settings(max_examples=20)
@given(st.lists(monic_quadratic_13, min_size=3, max_size=3), st.integers(1, P13 - 1), st.integers(1, P13 - 1))
def test_richelot_dual_preserves_frobenius_f13(gs, lead, delta):
    F = gs[0] * gs[1] * gs[2]
    assume(discriminant(F))
    c = Genus2Curve(Fp(delta, P13), F * Fp(lead, P13))
    try:
        res = richelot_dual(c, QuadFactorization(tuple(gs)))
    except CurveError:
        assume(False)
    assert frobenius_charpoly(c, P13).coeffs == frobenius_charpoly(res.dual, P13).coeffs


small = st.integers(-5, 5)
nonzero_rational = st.tuples(st.integers(-9, 9).filter(bool), st.integers(1, 9)).map(lambda t: Fraction(*t))


@settings(max_examples=50)
@given(
    st.lists(small, min_size=7, max_size=7),
    st.tuples(*[st.integers(-3, 3)] * 4),
    nonzero_rational,
    nonzero_rational,
)
def test_igusa_invariant_under_mobius_and_twist(cs, mp, scale, twist):
    assume(cs[6] != 0)
    f = Poly([Fraction(x) for x in cs])
    assume(discriminant(f))
    a, b, c, d = mp
    assume(a * d - b * c != 0)
    C = Genus2Curve(Fraction(1), f)
    try:
        C2 = mobius_transform(C, mp, scale, twist)
    except DegenerateMap:
        assume(False)
    assert geometrically_isomorphic(C, C2)


@settings(max_examples=25)
@given(st.lists(st.integers(-8, 8), min_size=6, max_size=6, unique=True), nonzero_rational, nonzero_rational)
def test_double_dual_is_igusa_fixed(roots, lead, delta):
    rs = [Fraction(r) for r in roots]
    f = Poly.from_roots(rs, lead)
    C = Genus2Curve(delta, f)
    try:
        first = richelot_dual(C, factorization_from_pairing(rs, ((0, 1), (2, 3), (4, 5))))
        D = first.dual
        assume(all(h.degree() == 2 for h in first.h))
        back = richelot_dual(D, QuadFactorization(tuple(h.monic() for h in first.h)))
    except CurveError:
        assume(False)
    assert geometrically_isomorphic(back.dual, C)


cubic = st.tuples(st.integers(-5, 5), st.integers(-5, 5), st.integers(-5, 5)).map(
    lambda t: Poly([Fraction(t[2]), Fraction(t[1]), Fraction(t[0]), Fraction(1)])
)
element = st.lists(st.integers(-6, 6), min_size=3, max_size=3).filter(any)


def _oracle_primes(h: Poly, alpha_rep: Poly, count: int = 40):
    bad = int(discriminant(h)) * 2
    for c in alpha_rep.c:
        bad *= Fraction(c).denominator
    return [p for p in primerange(3, 2000) if bad % p][:count]


@settings(max_examples=50)
@given(cubic, element, st.booleans())
def test_etale_squareness_matches_mod_p_oracle(h, coeffs, make_square):
    assume(is_irreducible(h))
    L = EtaleAlgebra(h, "T")
    beta = L(Poly([Fraction(x) for x in coeffs]))
    alpha = beta * beta if make_square else beta
    ok, root = is_square_in_etale(alpha)
    local = [is_square_mod_p(alpha.rep, h, p) for p in _oracle_primes(h, alpha.rep)]
    if make_square:
        assert ok
    if ok:
        assert root * root == alpha
        assert all(local)
    else:
        assert not all(local)
