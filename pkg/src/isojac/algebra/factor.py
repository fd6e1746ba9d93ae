"""Factorization over Q and F_p (backed by sympy) and rational root finding."""

from __future__ import annotations

from fractions import Fraction
from typing import List, Tuple

import sympy

from .poly import Poly
from .scalars import Fp

MAX_FACTOR_DEGREE = 8
_X = sympy.Symbol("x")


class UnsupportedFactorization(ValueError):
    pass


def _ring_of(f: Poly):
    c = f.lc()
    if isinstance(c, Fraction):
        return None
    if isinstance(c, Fp):
        return c.p
    raise UnsupportedFactorization(f"cannot factor over the ring of {c!r}")


def _to_sympy(f: Poly, p):
    if p is None:
        coeffs = [sympy.Rational(c.numerator, c.denominator) for c in reversed(f.c)]
        return sympy.Poly(coeffs, _X, domain=sympy.QQ)
    return sympy.Poly([int(c.v) for c in reversed(f.c)], _X, modulus=p)


def _from_sympy(g, p) -> Poly:
    cs = list(reversed(g.all_coeffs()))
    if p is None:
        return Poly([Fraction(int(c.p), int(c.q)) for c in cs])
    return Poly([Fp(int(c), p) for c in cs])


def factor_over_base(f: Poly, max_degree: int = MAX_FACTOR_DEGREE) -> List[Tuple[Poly, int]]:
    """Monic irreducible factors of f with multiplicities.

    lc(f) times the product of ``factor**mult`` equals f.
    """
    if f.degree() < 1:
        return []
    if f.degree() > max_degree:
        raise UnsupportedFactorization(f"degree {f.degree()} exceeds the cap {max_degree}")
    return _factor(f)


def _factor(f: Poly) -> List[Tuple[Poly, int]]:
    p = _ring_of(f)
    _, facs = _to_sympy(f, p).factor_list()
    out = [(_from_sympy(g, p).monic(), e) for g, e in facs]
    out.sort(key=lambda fe: (fe[0].degree(), [str(c) for c in fe[0].c]))
    return out


def factor_rational_unbounded(f: Poly) -> List[Tuple[Poly, int]]:
    """Same as factor_over_base without the degree cap (internal use for norms)."""
    return _factor(f) if f.degree() >= 1 else []


def is_irreducible(f: Poly) -> bool:
    facs = _factor(f)
    return len(facs) == 1 and facs[0][1] == 1


def rational_roots(f: Poly) -> List:
    """Distinct roots of f in the base field, read off the linear factors."""
    if f.degree() < 1:
        return []
    roots = [-g.c[0] for g, _ in _factor(f) if g.degree() == 1]
    return sorted(roots, key=lambda r: r if isinstance(r, Fraction) else r.v)
