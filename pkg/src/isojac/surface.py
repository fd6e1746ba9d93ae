"""The elliptic surface E: y^2 = x^3 - a x^2 - c x + b^2 over Q(s) and its quartic model F.

F is z^2 = (u^2 + a)^2 + 8 b u + 4 c.  Rational points on F with u = r + 2
give triples (r, s, s - 1) that satisfy the Galois condition.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Optional, Tuple, Union

from .algebra.poly import Poly
from .algebra.ratfunc import RatFunc
from .algebra.resultant import discriminant
from .algebra.scalars import fmt_rational
from .families import ParameterExcluded, surface_abc, surface_quartic_value

FunctionFieldElem = RatFunc


class OffCurve(ValueError):
    pass


class PointAtInfinity(ParameterExcluded):
    pass


@dataclass(frozen=True)
class WeierstrassCurve:
    """y^2 = x^3 + a2 x^2 + a4 x + a6."""

    a2: object
    a4: object
    a6: object

    def rhs(self, x):
        return ((x + self.a2) * x + self.a4) * x + self.a6

    def contains(self, pt: "SurfacePoint") -> bool:
        return pt.is_infinity or pt.y * pt.y == self.rhs(pt.x)


@dataclass(frozen=True)
class SurfacePoint:
    x: object = None
    y: object = None

    @property
    def is_infinity(self) -> bool:
        return self.x is None

    def __neg__(self):
        return self if self.is_infinity else SurfacePoint(self.x, -self.y)


INFINITY = SurfacePoint()


def surface_E(s) -> WeierstrassCurve:
    a, b, c = surface_abc(s)
    return WeierstrassCurve(-a, -c, b * b)


def generic_s() -> RatFunc:
    return RatFunc.var()


def point_P(s) -> SurfacePoint:
    _, b, _ = surface_abc(s)
    return SurfacePoint(b * 0, b)


def point_T(s) -> SurfacePoint:
    x = 4 * s * s * (1 - s)
    return SurfacePoint(x, x * 0)


def ec_group_law(E: WeierstrassCurve, p1: SurfacePoint, p2: SurfacePoint) -> SurfacePoint:
    """Chord and tangent addition with the point at infinity as identity."""
    for pt in (p1, p2):
        if not E.contains(pt):
            raise OffCurve(f"{pt} is not on the curve")
    if p1.is_infinity:
        return p2
    if p2.is_infinity:
        return p1
    if p1.x == p2.x:
        if p1.y != p2.y or not p1.y:
            return INFINITY
        lam = (3 * p1.x * p1.x + 2 * E.a2 * p1.x + E.a4) / (2 * p1.y)
    else:
        lam = (p2.y - p1.y) / (p2.x - p1.x)
    x3 = lam * lam - E.a2 - p1.x - p2.x
    y3 = lam * (p1.x - x3) - p1.y
    return SurfacePoint(x3, y3)


def ec_multiple(E: WeierstrassCurve, pt: SurfacePoint, n: int) -> SurfacePoint:
    if n < 0:
        return ec_multiple(E, -pt, -n)
    acc, base = INFINITY, pt
    while n:
        if n & 1:
            acc = ec_group_law(E, acc, base)
        base = ec_group_law(E, base, base)
        n >>= 1
    return acc


InfiniteTag = Tuple[str, int]


def iso_E_to_F(s, pt: SurfacePoint) -> Union[Tuple[object, object], InfiniteTag]:
    """(u, z) = ((y - b)/x, 2x - u^2 - a); the points with x = 0 use the limiting values.

    The origin goes to ("inf", 1) where z/u^2 -> 1, and -P to ("inf", -1).
    """
    a, b, c = surface_abc(s)
    if pt.is_infinity:
        return ("inf", 1)
    if pt.x == 0:
        if pt.y == b:  # P: the tangent line y = u x + b meets E doubly at x = 0
            u = -c / (2 * b)
            return (u, -(u * u + a))
        return ("inf", -1)
    u = (pt.y - b) / pt.x
    return (u, 2 * pt.x - u * u - a)


def iso_F_to_E(s, uz) -> SurfacePoint:
    a, b, _ = surface_abc(s)
    if isinstance(uz[0], str):
        return INFINITY if uz[1] == 1 else SurfacePoint(b * 0, -b)
    u, z = uz
    x = (z + u * u + a) / 2
    return SurfacePoint(x, u * x + b)


def on_F(s, u, z) -> bool:
    return z * z == surface_quartic_value(u, s)


@dataclass(frozen=True)
class SurfaceTriple:
    r: Fraction
    s: Fraction
    t: Fraction
    s0: Fraction
    n: int
    addT: bool
    u: Fraction
    z: Fraction

    def to_json(self) -> dict:
        return {
            "r": fmt_rational(self.r),
            "s": fmt_rational(self.s),
            "t": fmt_rational(self.t),
            "origin": {"s0": fmt_rational(self.s0), "n": self.n, "addT": self.addT},
        }


def _singular_x(E: WeierstrassCurve):
    """x-coordinate of the singular point (y = 0) of a singular fiber, else None.

    The chord and tangent law stays valid on the smooth locus, so only T can hit it.
    """
    h = Poly([E.a6, E.a4, E.a2, 1])
    if discriminant(h):
        return None
    g = h.gcd(h.derivative())
    if g.degree() != 1:
        raise ParameterExcluded("E has a cusp or worse at this s")
    return -g[0] / g[1]


def surface_triple(s0, n: int, addT: bool = False) -> SurfaceTriple:
    """(r, s, t) = (u - 2, s0, s0 - 1) from the image of nP (+ T) on F at s = s0."""
    s0 = Fraction(s0)
    a, b, c = surface_abc(s0)
    if not b:
        raise ParameterExcluded("b vanishes at this s (s in {0, 1, 1/4})")
    E = surface_E(s0)
    node = _singular_x(E)
    if node is not None and addT and point_T(s0).x == node:
        raise ParameterExcluded("T is the singular point of this fiber")
    Q = ec_multiple(E, point_P(s0), n)
    if addT:
        Q = ec_group_law(E, Q, point_T(s0))
    img = iso_E_to_F(s0, Q)
    if isinstance(img[0], str):
        raise PointAtInfinity("the point maps to an infinite point of F")
    u, z = img
    return SurfaceTriple(u - 2, s0, s0 - 1, s0, n, addT, u, z)


def translated_model_s2() -> Tuple[WeierstrassCurve, SurfacePoint]:
    """At s = 2, shift x by 40 to reach y^2 = x^3 - 13824."""
    E = surface_E(Fraction(2))
    shift = Fraction(40)
    # x_old = x_new - 40
    X = Poly([-shift, 1])
    rhs = X * X * X + X * X * E.a2 + X * E.a4 + E.a6
    if rhs[1] != 0:
        raise ValueError("shift does not remove the quadratic term")
    E2 = WeierstrassCurve(rhs[2], rhs[1], rhs[0])
    P = point_P(Fraction(2))
    return E2, SurfacePoint(P.x + shift, P.y)


def surface_identity_checks() -> Dict[str, bool]:
    """Group-law, isomorphism, involution and infinite-point identities over Q(s), tested on P, T and small combinations."""
    s = generic_s()
    E = surface_E(s)
    P, T = point_P(s), point_T(s)
    out = {"P_on_E": E.contains(P), "T_on_E": E.contains(T)}
    out["T_order_2"] = ec_group_law(E, T, T).is_infinity and not T.is_infinity
    samples = [P, T, ec_group_law(E, P, P), ec_group_law(E, P, T)]
    ok_a = True
    for Q in samples:
        uz = iso_E_to_F(s, Q)
        ok_a &= not isinstance(uz[0], str) and on_F(s, *uz) and iso_F_to_E(s, uz) == Q
    out["a_isomorphism"] = ok_a
    ok_d = True
    for Q in samples[1:]:
        R = -ec_group_law(E, Q, P)
        u1, z1 = iso_E_to_F(s, Q)
        u2, z2 = iso_E_to_F(s, R)
        ok_d &= u1 == u2 and z1 == -z2
    out["d_involution"] = ok_d
    out["e_infinite_points"] = (
        iso_E_to_F(s, INFINITY) == ("inf", 1) and iso_E_to_F(s, -P) == ("inf", -1)
        and iso_F_to_E(s, ("inf", -1)) == -P
    )
    return out


def P_nontorsion_witness(max_n: int = 12) -> bool:
    """nP is not the origin for 1 <= n <= max_n at s = 2."""
    s = Fraction(2)
    E, P = surface_E(s), point_P(s)
    Q = INFINITY
    for _ in range(max_n):
        Q = ec_group_law(E, Q, P)
        if Q.is_infinity:
            return False
    return True


# -- rational curves on the surface ---------------------------------------------------


def _rf(num, den=(1,)) -> RatFunc:
    return RatFunc(Poly(list(num)), Poly(list(den)))


def rational_curve_fixtures() -> Dict[str, Tuple[RatFunc, RatFunc, RatFunc]]:
    """(s, u, z) as rational functions of a parameter w."""
    out = {}
    out["s=5/4"] = (RatFunc(Fraction(5, 4)), _rf([40, 5, 4], [0, 4]), _rf([-200, -50, 0, 5, 2], [0, 0, 2]))
    out["s=-1"] = (RatFunc(-1), _rf([-4, -10, 2], [0, 1]), _rf([-16, -80, 0, -40, 4], [0, 0, 1]))
    out["3-torsion"] = (
        _rf([5, 0, -1], [4]),
        _rf([-10, -5, 7, 1, -1], [8, 4]),
        _rf([0, 0, 0, -135, -135, -18, 22, 9, 1], [32, 32, 8]),
    )
    s_lin = _rf([76, 36, 4], [0, 1])
    out["linear-u"] = (
        s_lin,
        -s_lin,
        _rf([-109744 * 16, -102163 * 16, -29545 * 16, 0, 1555 * 16, 283 * 16, 16 * 16], [0, 0, 0, 1]),
    )
    s_quad = _rf([1, 3, 1], [0, 1])
    out["quadratic-u"] = (
        s_quad,
        4 * s_quad * s_quad - 6 * s_quad,
        _rf([x * 4 for x in (-4, -35, -105, -119, 0, 119, 105, 35, 4)], [0, 0, 0, 0, 1]),
    )
    return out


def verify_rational_curves(fixtures: Optional[Dict] = None) -> Dict[str, bool]:
    """Whether z^2 = (u^2 + a)^2 + 8 b u + 4 c holds identically in w for each fixture."""
    fixtures = fixtures or rational_curve_fixtures()
    return {name: on_F(s, u, z) for name, (s, u, z) in fixtures.items()}


def triple_from_fixture(name: str, w) -> Tuple[Fraction, Fraction, Fraction]:
    """(r, s, s - 1) from a point of one of the rational curves at parameter value w."""
    s_, u, z = rational_curve_fixtures()[name]
    s0, u0 = s_(Fraction(w)), u(Fraction(w))
    return u0 - 2, s0, s0 - 1
