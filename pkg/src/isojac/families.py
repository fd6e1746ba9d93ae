"""Constructors for the genus-2 families and the Galois condition on (r, s, t)."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations, product as iproduct
from typing import Dict, List, Optional, Tuple

from .algebra.etale import EtaleAlgebra, EtaleElement, NotInvertible, is_square_in_etale, norm_poly
from .algebra.poly import Poly
from .algebra.ratfunc import RatFunc, is_square_ratfunc
from .algebra.resultant import discriminant
from .algebra.scalars import fmt_rational, is_square_rational
from .richelot import (
    Genus2Curve,
    QuadFactorization,
    RichelotResult,
    factorization_from_pairing,
    is_galois_stable,
    richelot_dual,
)


class ParameterExcluded(ValueError):
    """The parameter lies outside the open set where the construction is valid."""


def _one_like(x):
    return x * 0 + 1


def _provenance(family: str, statement: str, **params) -> dict:
    return {
        "family": family,
        "parameters": {k: fmt_rational(v) if isinstance(v, (int, Fraction)) else str(v) for k, v in params.items()},
        "statement": statement,
    }


# -- the C(t) family ------------------------------------------------------------


def _c_of_t(t) -> Genus2Curve:
    one = _one_like(t)
    quad = Poly([-t, 0 * one, 2 * one])
    quart = Poly([one, 0 * one, 4 * (t * t + t + 1), 0 * one, 4 * t * t])
    return Genus2Curve(t + 1, quad * quart)


@dataclass(frozen=True)
class Family1Data:
    t: object
    C: Genus2Curve
    C_minus: Genus2Curve
    provenance: dict = field(compare=False)


def family1_pair(t) -> Family1Data:
    """C(t) and C(-t), where C(t): (t+1) y^2 = (2x^2 - t)(4t^2 x^4 + 4(t^2+t+1) x^2 + 1)."""
    if not (t * (t * t - 1) * (t * t + 1)):
        raise ParameterExcluded("need t(t^2-1)(t^2+1) != 0")
    try:
        C, Cm = _c_of_t(t), _c_of_t(-t)
    except ValueError as exc:
        raise ParameterExcluded(str(exc)) from exc
    return Family1Data(t, C, Cm, _provenance("f1", "C(t) and C(-t) have isomorphic Jacobians", t=t))


def family1_internals(t=None) -> Dict[str, bool]:
    """Identity checks on E, E', the 2-isogeny psi and h_t, generically in Q(t).

    When t is given, the specialized C(t) is also compared with h_t.
    """
    T = Poly([0, 1])
    s2 = T * T + 1  # t^2 + 1
    # E: y^2 = x(x^2 + A x + B), E': y^2 = x(x^2 + A' x + B')
    A, B = s2 * -4, s2 * 4
    A2, B2 = s2 * 8, T * T * s2 * 16
    disc_E = B * B * (A * A - B * 4) * 16
    disc_E2 = B2 * B2 * (A2 * A2 - B2 * 4) * 16
    checks = {"disc_ratio_square": is_square_ratfunc(RatFunc(disc_E, disc_E2))}

    # psi(x, y) = (y^2/x^2, (x^2 - 4(t^2+1)) y / x^2); clear x^6 and substitute y^2 = e(x)
    one = Poly([1])
    X = Poly([Poly([0]), one])
    e = X * (X * X + X * A + B)  # polynomial in x over Q[t]
    c4 = X * X - s2 * 4
    lhs = X * X * c4 * c4 * e
    rhs = e * e * e + e * e * X * X * A2 + e * X**4 * B2
    checks["isogeny_maps_E_to_E2"] = lhs == rhs

    # h_t / ((t+1) * F_t) with F_t the right side of C(t)
    ratio = RatFunc(Poly([2**38]) * T**6 * (T + 1) ** 3 * s2**12, T + 1)
    checks["h_t_square_factor"] = is_square_ratfunc(ratio)
    if t is not None:
        C = family1_pair(t).C
        h_t = C.f * (Fraction(2) ** 38 * t**6 * (t + 1) ** 3 * (t * t + 1) ** 12)
        checks["h_t_specialized"] = is_square_rational(h_t.lc() / (C.f.lc() * C.delta))[0]
    return checks


# -- the v family ---------------------------------------------------------------


def family2_excluded(v) -> bool:
    prod = (
        (v * v - v + 4) * (v * v + v + 2) * (v * v + 3 * v + 4)
        * (v**3 - 6 * v * v - 7 * v - 4) * (v**3 - 4 * v * v + 7 * v + 4)
    )
    return v == 0 or v == 1 or v == 4 or prod == 0


def family2_rho(v) -> Tuple[EtaleAlgebra, List[EtaleElement]]:
    one = _one_like(v)
    W = EtaleAlgebra(Poly([-v, 0 * one, one]), "w")
    w = W.gen
    rho = [
        (w - 2) * (w + 1) / (2 * w * w),
        (-w - 2) * (1 - w) / (2 * w * w),
        -2 * (w + 2) / ((w - 2) * (w + 1)),
        (-w - 2) * (1 - w) / ((-w) * (-w - 1)),
        (w - 2) * (w + 1) / (w * (w - 1)),
        -2 * (2 - w) / ((-w - 2) * (1 - w)),
    ]
    return W, rho


G_PAIRING = ((0, 4), (1, 3), (2, 5))  # {1,5}, {2,4}, {3,6}
GPRIME_PAIRING = ((0, 2), (1, 5), (3, 4))  # {1,3}, {2,6}, {4,5}


@dataclass(frozen=True)
class Family2Data:
    v: object
    algebra: EtaleAlgebra
    rho: Tuple[EtaleElement, ...]
    D: Genus2Curve
    fact: QuadFactorization
    fact_prime: QuadFactorization
    C: RichelotResult
    C_prime: RichelotResult
    splitting_disc: object
    provenance: dict = field(compare=False)


def family2_construct(v) -> Family2Data:
    if family2_excluded(v):
        raise ParameterExcluded("v is excluded (v in {0,1,4} or the nonvanishing product is 0)")
    try:
        W, rho = family2_rho(v)
    except NotInvertible as exc:
        raise ParameterExcluded(f"rho undefined: {exc}") from exc
    one = W.one
    f = Poly([one])
    for r in rho:
        f = f * Poly([-r, one])
    if not all(c.is_base() for c in f.c):
        raise ValueError("D does not descend to the base field")
    D = Genus2Curve(_one_like(v), Poly([c.base_value() for c in f.c]))
    G = factorization_from_pairing(rho, G_PAIRING, W)
    Gp = factorization_from_pairing(rho, GPRIME_PAIRING, W)
    C, Cp = richelot_dual(D, G), richelot_dual(D, Gp)
    return Family2Data(
        v, W, tuple(rho), D, G, Gp, C, Cp, v * (v - 4),
        _provenance("f2", "Richelot duals C, C' with Jacobians isomorphic over K(sqrt(v(v-4)))", v=v),
    )


def family2_to_crst(v) -> Tuple:
    """(r, s, t) with s = v/4, t = (v-4)/4, r = (7v^2 - 11v - 4)/(4 - 4v)."""
    return (7 * v * v - 11 * v - 4) / (4 - 4 * v), v / Fraction(4), (v - 4) / Fraction(4)


# -- Bending's construction -------------------------------------------------------


@dataclass(frozen=True)
class BendingParams:
    A: object
    P: object
    Q: object
    D: object
    B: object
    C: object
    R: object
    cubic: Poly
    curve: Genus2Curve


def bending_G(alpha, P, Q, R) -> Poly:
    """G(X) = X^2 - alpha X + P alpha^2 + Q alpha + R."""
    return Poly([P * alpha * alpha + Q * alpha + R, -alpha, _one_like(alpha)])


def bending_curve(A, P, Q, D) -> BendingParams:
    if not P:
        raise ParameterExcluded("P must be nonzero")
    if not D:
        raise ParameterExcluded("D must be nonzero")
    B = (A * P * Q - Q * Q + 4 * P * P + 1) / (P * P)
    C = 4 * (A * P - Q) / P
    R = 4 * P
    one = _one_like(P)
    cubic = Poly([C, B, A, one])
    if not discriminant(cubic):
        raise ParameterExcluded("the cubic T^3 + A T^2 + B T + C is not separable")
    L = EtaleAlgebra(cubic, "T")
    f = norm_poly(bending_G(L.gen, P, Q, R), L)
    if f.degree() != 6 or not discriminant(f):
        raise ParameterExcluded("G1 G2 G3 is not separable")
    return BendingParams(A, P, Q, D, B, C, R, cubic, Genus2Curve(D, f))


def bending_obvious_dual(bp: BendingParams) -> RichelotResult:
    """Richelot dual of D Y^2 = G1 G2 G3 for the factorization into the G_i."""
    from .algebra.numfield import splitting_field

    M, alphas = splitting_field(bp.cubic)
    if M is None:
        alphas = [Fraction(a) for a in alphas]
    gs = tuple(bending_G(a, bp.P, bp.Q, bp.R) for a in alphas)
    return richelot_dual(bp.curve, QuadFactorization(gs, M))


# -- C(r, s, t) ---------------------------------------------------------------------


def crst_coefficients(r, s, t):
    c2 = r + 4 * t
    c1 = 4 * t * (r + s**3 - s * s * t - 2 * s * s + 5 * s + t)
    c0 = 4 * t * (s - 1) * (r * s * s - r * s * t - r * s - r * t - 8 * s * t)
    return c2, c1, c0


def crst_constant(s, t):
    """The constant term offset: g = x^2 - 2 beta x + (1-s) beta^2 - k."""
    return 4 * s * (s - 1) ** 2 * t * (s - t - 1)


def crst_g(beta, s, t) -> Poly:
    return Poly([(1 - s) * beta * beta - crst_constant(s, t), -2 * beta, _one_like(beta)])


@dataclass(frozen=True)
class CrstData:
    r: object
    s: object
    t: object
    c: Tuple
    h: Poly
    L: EtaleAlgebra
    curve: Genus2Curve
    Delta: object
    Delta_prime: EtaleElement
    provenance: dict = field(compare=False)

    @property
    def beta(self) -> EtaleElement:
        return self.L.gen

    @property
    def g(self) -> Poly:
        return crst_g(self.beta, self.s, self.t)


def crst_curve(r, s, t) -> CrstData:
    if s == 0 or s == 1 or t == 1:
        raise ParameterExcluded("need s not in {0, 1} and t != 1")
    c2, c1, c0 = crst_coefficients(r, s, t)
    one = _one_like(r + s + t)
    h = Poly([-c0, c1, -c2, one])
    Delta = discriminant(h)
    if not Delta:
        raise ParameterExcluded("h is not separable")
    L = EtaleAlgebra(h, "T")
    g = crst_g(L.gen, s, t)
    f = norm_poly(g, L)
    if not discriminant(f):
        raise ParameterExcluded("f = g1 g2 g3 is not separable")
    k = crst_constant(s, t)
    Dp = 4 * s * L.gen * L.gen + 4 * k  # discriminant of g
    return CrstData(
        r, s, t, (c2, c1, c0), h, L, Genus2Curve(one, f), Delta, Dp,
        _provenance("crst", "C(r,s,t) with real multiplication by sqrt(2)", r=r, s=s, t=t),
    )


@dataclass(frozen=True)
class GaloisVerdict:
    holds: bool
    root: Optional[EtaleElement]
    shortcut_value: Optional[Fraction] = None
    shortcut_holds: Optional[bool] = None

    def to_json(self) -> dict:
        out = {"holds": self.holds}
        if self.shortcut_value is not None:
            out["shortcut"] = {"delta": fmt_rational(self.shortcut_value), "is_square": self.shortcut_holds}
        return out


def surface_abc(s):
    a = -4 * s * (s * s + 11 * s - 11)
    b = -8 * s * s * (s - 1) * (4 * s - 1)
    c = -16 * s * s * (s - 1) * (28 * s * s - 19 * s + 1)
    return a, b, c


def surface_quartic_value(u, s):
    a, b, c = surface_abc(s)
    return (u * u + a) ** 2 + 8 * b * u + 4 * c


def galois_condition(r, s, t, data: Optional[CrstData] = None) -> GaloisVerdict:
    """Whether Delta * Delta' is a square in L = K[T]/(h)."""
    data = data or crst_curve(r, s, t)
    ok, root = is_square_in_etale(data.Delta_prime * data.Delta)
    if t == s - 1:
        val = surface_quartic_value(r + 2, s)
        return GaloisVerdict(ok, root, val, is_square_rational(val)[0])
    return GaloisVerdict(ok, root)


# -- Richelot-dual pairs of C(r, s, t) ---------------------------------------------


@dataclass(frozen=True)
class GensimplePair:
    data: CrstData
    field: Optional[EtaleAlgebra]
    roots: Tuple  # r_1..r_6, with {r1,r2}, {r3,r4}, {r5,r6} the roots of g1, g2, g3
    betas: Tuple
    G: QuadFactorization
    G_prime: QuadFactorization
    dual: RichelotResult
    dual_prime: RichelotResult
    splitting_disc: object


def _labelings(betas, roots_by_beta):
    """All labelings r1..r6 with {r1,r2}, {r3,r4}, {r5,r6} the roots of g1, g2, g3."""
    for order in permutations(range(3)):
        for flips in iproduct((0, 1), repeat=3):
            lab = []
            for slot, bi in enumerate(order):
                pair = roots_by_beta[bi]
                lab.extend(pair[::-1] if flips[slot] else pair)
            yield [betas[i] for i in order], lab


def gensimple_pair(r, s, t, data: Optional[CrstData] = None) -> GensimplePair:
    """The G- and G'-Richelot duals of C(r, s, t) for a labeling satisfying the Galois condition."""
    from .algebra.numfield import roots_in_field, splitting_field

    data = data or crst_curve(r, s, t)
    if not galois_condition(r, s, t, data).holds:
        raise ParameterExcluded("Delta * Delta' is not a square in L")
    M, roots = splitting_field(data.curve.f)
    if M is None:
        roots = [Fraction(x) for x in roots]
        betas = sorted(Fraction(x) for x in _rational_roots(data.h))
    else:
        betas = roots_in_field(data.h, M)
    if len(betas) != 3 or len(roots) != 6:
        raise ValueError("could not split h and f in a common field")
    roots_by_beta = []
    for b in betas:
        g = crst_g(b, s, t)
        mine = [x for x in roots if not g(x)]
        if len(mine) != 2:
            raise ValueError("roots of f do not match the g_i")
        roots_by_beta.append(mine)
    for bs, lab in _labelings(betas, roots_by_beta):
        G = factorization_from_pairing(lab, ((0, 4), (1, 3), (2, 5)), M)
        Gp = factorization_from_pairing(lab, ((0, 2), (1, 5), (3, 4)), M)
        if is_galois_stable(G.g) and is_galois_stable(Gp.g):
            D1 = richelot_dual(data.curve, G)
            D2 = richelot_dual(data.curve, Gp)
            return GensimplePair(data, M, tuple(lab), tuple(bs), G, Gp, D1, D2, s * t)
    raise ValueError("no root labeling makes both G and G' Galois stable")


def _rational_roots(h: Poly):
    from .algebra.factor import rational_roots

    return rational_roots(h)
