from fractions import Fraction as F

import pytest
import sympy
from sympy.polys.subresultants_qq_zz import sylvester
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from isojac.algebra.etale import EtaleAlgebra, NotInvertible, charpoly_hessenberg, norm_poly, sqrt_in_etale
from isojac.algebra.factor import factor_over_base, is_irreducible, rational_roots
from isojac.algebra.numfield import roots_in_field, splitting_field
from isojac.algebra.poly import Poly, lagrange_interpolate
from isojac.algebra.ratfunc import RatFunc, is_square_ratfunc
from isojac.algebra.resultant import (
    crt_symmetric,
    discriminant,
    resultant,
    resultant_mod_p,
    resultant_zz,
    sylvester_determinant,
)
from isojac.algebra.scalars import (
    GF,
    Fp,
    RingMismatch,
    fmt_rational,
    is_square_rational,
    legendre,
    parse_rational,
    sqrt_fq,
    squarefree_part,
)
from isojac.algebra.serialize import poly_from_json, poly_to_json, ring_of, scalar_from_json, scalar_to_json

rat = st.fractions(min_value=-20, max_value=20, max_denominator=12)
qpoly = st.lists(rat, min_size=1, max_size=6).map(Poly)
zpoly = st.lists(st.integers(-30, 30), min_size=2, max_size=7).filter(lambda c: c[-1] != 0)


def _sym(f: Poly):
    x = sympy.Symbol("x")
    return sympy.Poly([sympy.Rational(c.numerator, c.denominator) for c in map(F, reversed(f.c))] or [0], x)


# -- scalars ---------------------------------------------------------------------


def test_parse_and_format_rationals():
    assert parse_rational("-4/3") == F(-4, 3)
    assert parse_rational(" 7 ") == 7
    assert fmt_rational(F(6, 3)) == "2"
    assert fmt_rational(F(-1, 6)) == "-1/6"
    with pytest.raises(ValueError):
        parse_rational("0.5")


def test_squares_and_squarefree_part():
    assert is_square_rational(F(49, 4)) == (True, F(7, 2))
    assert not is_square_rational(F(-4))[0]
    assert squarefree_part(F(1, 8)) == 2
    assert squarefree_part(F(-64, 9)) == -1
    assert legendre(2, 7) == 1 and legendre(3, 7) == -1


@given(st.integers(1, 10**6), st.integers(-50, 50).filter(bool))
def test_squarefree_part_defines_square_class(n, k):
    q = F(n * k * k)
    s = squarefree_part(q)
    assert is_square_rational(q / s)[0]


@given(st.integers(0, 100), st.integers(1, 100))
def test_fp_field_axioms(a, b):
    p = 101
    x, y = Fp(a, p), Fp(b, p)
    assert (x + y) - y == x
    assert (x * y) / y == x
    assert x * y.inverse() * y == x


def test_fp_ring_mismatch():
    with pytest.raises(RingMismatch):
        Fp(1, 5) + Fp(1, 7)


@pytest.mark.parametrize("p,k", [(3, 2), (11, 2), (5, 3)])
def test_extension_field_inverses_and_sqrt(p, k):
    K = GF(p, k)
    elems = list(K.elements())
    assert len(elems) == p**k
    nonzero = [e for e in elems if e != K(0)]
    for e in nonzero[:50]:
        assert e * e.inverse() == K(1)
        r = sqrt_fq(e * e)
        assert r * r == e * e
    assert sum(1 for e in nonzero if e.is_square()) == (p**k - 1) // 2


# -- polynomials -----------------------------------------------------------------


@given(qpoly, qpoly)
def test_poly_divmod_identity(f, g):
    assume(not g.is_zero())
    q, r = f.divmod(g)
    assert q * g + r == f
    assert r.is_zero() or r.degree() < g.degree()


@given(qpoly, qpoly)
def test_poly_gcd_matches_sympy(f, g):
    assume(not (f.is_zero() and g.is_zero()))
    d = f.gcd(g)
    assert (f % d).is_zero() if not d.is_zero() else True
    expected = sympy.gcd(_sym(f), _sym(g))
    assert d.degree() == expected.degree()


@given(qpoly, rat)
def test_poly_eval_and_compose(f, a):
    g = Poly([a, F(1)])
    assert f.compose(g)(F(0)) == f(a)
    assert f.derivative()(a) == _sym(f).diff().eval(sympy.Rational(a.numerator, a.denominator))


def test_lagrange_interpolation():
    f = Poly([F(1), F(-2), F(0), F(3)])
    xs = [F(i) for i in range(4)]
    assert lagrange_interpolate(xs, [f(x) for x in xs]) == f


def test_ratfunc_arithmetic():
    s = RatFunc.var()
    r = (s * s - 1) / (s - 1)
    assert r == s + 1
    assert r(F(3)) == 4
    assert is_square_ratfunc((s + 1) * (s + 1) / (s * s))
    assert not is_square_ratfunc(s)


# -- resultants ------------------------------------------------------------------


@settings(max_examples=40)
@given(zpoly, zpoly)
def test_resultant_matches_sylvester_and_sympy(f, g):
    pf, pg = Poly([F(c) for c in f]), Poly([F(c) for c in g])
    r = resultant(pf, pg)
    assert r == sylvester_determinant(pf, pg)
    assert resultant_zz(f, g) == r
    x = sympy.Symbol("x")
    fx, gx = (sum(c * x**i for i, c in enumerate(cs)) for cs in (f, g))
    assert r == sylvester(fx, gx, x).det()
    for p in (101, 103):
        if f[-1] % p and g[-1] % p:
            assert resultant_mod_p(f, g, p) == int(r) % p


def test_discriminant_of_quadratic():
    assert discriminant(Poly([F(1), F(3), F(2)])) == 1
    assert discriminant(Poly([F(1), F(2), F(1)])) == 0


def test_crt_symmetric():
    assert crt_symmetric([2, 3], [5, 7]) in (17, 17 - 35)
    assert crt_symmetric([-1 % 5, -1 % 7], [5, 7]) == -1


# -- factoring and fields ---------------------------------------------------------


def test_factor_over_q_and_fp():
    f = Poly([F(-2), F(0), F(1)]) * Poly([F(1), F(1)]) ** 2
    facs = factor_over_base(f)
    assert sorted((g.degree(), e) for g, e in facs) == [(1, 2), (2, 1)]
    assert rational_roots(f) == [F(-1)]
    assert is_irreducible(Poly([F(-2), F(0), F(1)]))
    fp = Poly([Fp(1, 7), Fp(0, 7), Fp(1, 7)])  # x^2 + 1 is irreducible mod 7
    assert factor_over_base(fp) == [(fp, 1)]


def test_etale_algebra_basics():
    L = EtaleAlgebra(Poly([F(-2), F(0), F(0), F(1)]), "T")
    T = L.gen
    assert T**3 == L(2)
    assert (T + 1) * (T + 1).inverse() == L.one
    assert T.char_poly() == L.modulus
    assert T.norm() == 2 and T.trace() == 0
    assert L.is_field
    M = EtaleAlgebra(Poly([F(-1), F(0), F(1)]), "T")
    assert not M.is_field
    with pytest.raises(NotInvertible):
        (M.gen - 1).inverse()


def test_charpoly_hessenberg_against_sympy():
    m = [[F(1), F(2), F(0)], [F(3), F(-1), F(4)], [F(0), F(5), F(2)]]
    cp = charpoly_hessenberg(m)
    expected = sympy.Matrix(m).charpoly().all_coeffs()
    assert [F(int(c)) for c in reversed(expected)] == list(cp.c)


def test_norm_poly_of_linear_is_modulus():
    h = Poly([F(-3), F(-1), F(0), F(1)])
    L = EtaleAlgebra(h, "T")
    g = Poly([-L.gen, L.one])
    assert norm_poly(g, L) == h


def test_sqrt_in_cubic_field():
    L = EtaleAlgebra(Poly([F(-2), F(0), F(0), F(1)]), "T")
    beta = L.gen * 3 - 1
    root = sqrt_in_etale(beta * beta)
    assert root is not None and root * root == beta * beta
    assert sqrt_in_etale(L.gen) is None


def test_splitting_field_of_biquadratic():
    f = Poly([F(-2), F(0), F(1)]) * Poly([F(-3), F(0), F(1)])
    M, roots = splitting_field(f)
    assert M.n == 4 and len(roots) == 4
    assert all(not f(r) for r in roots)
    assert len(roots_in_field(Poly([F(-6), F(0), F(1)]), M)) == 2


# -- serialization ------------------------------------------------------------------


@pytest.mark.parametrize("x", [F(-7, 3), Fp(4, 11), GF(11, 2)((3, 5))])
def test_scalar_json_roundtrip(x):
    ring = ring_of(x)
    assert scalar_from_json(scalar_to_json(x), ring) == x


def test_poly_json_roundtrip():
    f = Poly([F(1, 2), F(0), F(-3)])
    assert poly_from_json(poly_to_json(f), {"kind": "Q"}) == f
