"""Factoring over number fields Q[X]/(phi) and small splitting fields.

Factoring uses the norm method: shift p(x) to p(x - c*theta) until its norm
down to Q[x] is squarefree, factor the norm over Q, and pull each rational
factor back with a gcd over the number field.  Splitting fields are built by
adjoining one irreducible factor at a time, re-expressing the field by a
primitive element after each step.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import count
from typing import List, Sequence, Tuple

from .etale import EtaleAlgebra, EtaleElement, norm_poly
from .factor import factor_rational_unbounded
from .poly import Poly


class SplittingFieldTooLarge(ValueError):
    pass


def _shifts():
    yield 0
    for k in count(1):
        yield k
        yield -k


def _lift(p: Poly, M: EtaleAlgebra) -> Poly:
    return Poly([M(c) for c in p.c])


def factor_over_field(p: Poly, M: EtaleAlgebra) -> List[Poly]:
    """Monic irreducible factors over the field M of a squarefree p in M[x] (or Q[x])."""
    p = _lift(p, M).monic()
    theta = M.gen
    for c in _shifts():
        shift = Poly([-c * theta, M.one])
        pc = p.compose(shift)
        N = norm_poly(pc, M)
        if N.is_squarefree():
            break
    back = Poly([c * theta, M.one])
    out = []
    for A, _ in factor_rational_unbounded(N):
        g = pc.gcd(_lift(A, M))
        if g.degree() > 0:
            out.append(g.compose(back).monic())
    assert sum(g.degree() for g in out) == p.degree()
    return out


def roots_in_field(p: Poly, M: EtaleAlgebra) -> List[EtaleElement]:
    return [-g[0] for g in factor_over_field(p, M) if g.degree() == 1]


def _embed(a: EtaleElement, theta_new: EtaleElement) -> EtaleElement:
    return a.rep(theta_new)


def adjoin_root(M: EtaleAlgebra | None, psi: Poly, max_degree: int) -> Tuple[EtaleAlgebra, EtaleElement, EtaleElement | None]:
    """Field M(a) for a root a of psi (irreducible over M).

    Returns (M', a, theta') where theta' is the image of M's generator in M'.
    """
    if M is None:
        psi_q = Poly([c if isinstance(c, Fraction) else c.base_value() for c in psi.c])
        if psi_q.degree() > max_degree:
            raise SplittingFieldTooLarge(f"degree {psi_q.degree()} exceeds {max_degree}")
        Mn = EtaleAlgebra(psi_q, "X", max_degree=max_degree)
        return Mn, Mn.gen, None
    psi = _lift(psi, M)
    total = M.n * psi.degree()
    if total > max_degree:
        raise SplittingFieldTooLarge(f"degree {total} exceeds {max_degree}")
    theta = M.gen
    for c in _shifts():
        if c == 0:
            continue
        N = norm_poly(psi.compose(Poly([-c * theta, M.one])), M)
        if N.is_squarefree():
            break
    Mn = EtaleAlgebra(N, "X", max_degree=max_degree)
    Z = Mn.gen
    # gcd over Mn of phi(y) and psi(Z - c*y), with psi's coefficients written in y
    y_poly = Poly([Mn(0), Mn(1)])
    zy = Poly([Z, Mn(-c)])
    acc = Poly.zero()
    for k, a in enumerate(psi.c):
        acc = acc + Poly([Mn(v) for v in a.rep.c]).compose(y_poly) * (zy**k)
    phi = _lift(M.modulus, Mn)
    g = phi.gcd(acc)
    assert g.degree() == 1, "primitive element step failed"
    theta_new = -g[0]
    return Mn, Z - theta_new * c, theta_new


def splitting_field(f: Poly, max_degree: int = 6) -> Tuple[EtaleAlgebra | None, List]:
    """Smallest tower-free presentation of a splitting field of f over Q.

    Returns (M, roots) with M None when f splits over Q.  The roots are listed
    with multiplicity one each.
    """
    f = f.monic()
    M = None
    roots: List = []
    remaining = f
    while remaining.degree() > 0:
        if M is None:
            facs = [g for g, _ in factor_rational_unbounded(remaining)]
        else:
            facs = factor_over_field(remaining, M)
        lin = [g for g in facs if g.degree() == 1]
        roots.extend(-g[0] for g in lin)
        nonlin = [g for g in facs if g.degree() > 1]
        if not nonlin:
            break
        psi = max(nonlin, key=lambda g: g.degree())
        M_new, _, theta_new = adjoin_root(M, psi, max_degree)
        if M is None:
            roots = [M_new(r) for r in roots]
            remaining = _lift(Poly([c for c in _prod(nonlin).c]), M_new)
        else:
            roots = [_embed(r, theta_new) for r in roots]
            remaining = Poly([_embed(c, theta_new) for c in _prod(nonlin).c])
        M = M_new
    return M, roots


def _prod(ps: Sequence[Poly]) -> Poly:
    out = Poly([1]) if not ps else Poly([ps[0].c[-1] * 0 + 1])
    for p in ps:
        out = out * p
    return out
