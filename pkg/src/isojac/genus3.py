"""The genus-3 pair H(t) (hyperelliptic, as a space curve) and Q(t) (plane quartic).

With s = -(t^2 + t + 1), the Jacobians are both quotients of E1 x E2 x E3 by
maximal isotropic subgroups of the 2-torsion, where Ei: y^2 = x(x^2 + Ai x + Bi).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product as iproduct
from math import gcd
from typing import Dict, List, Optional, Tuple

from .algebra.poly import Poly
from .algebra.ratfunc import RatFunc, is_square_ratfunc
from .algebra.resultant import discriminant
from .algebra.scalars import fmt_rational, squarefree_part
from .families import ParameterExcluded, _provenance

Monomial = Tuple[int, int, int]


class NoRationalPoint(ValueError):
    pass


@dataclass(frozen=True)
class PlaneQuartic:
    """sum c_(i,j,k) X^i Y^j Z^k = 0 with i + j + k = 4."""

    coeffs: Dict[Monomial, object]
    genus: int = 3

    def quartic_coeffs(self) -> Dict[Monomial, object]:
        return self.coeffs

    def __call__(self, x, y, z):
        return sum(c * x**i * y**j * z**k for (i, j, k), c in self.coeffs.items())

    def to_json(self) -> dict:
        full = {f"{i}{j}{k}": "0" for i in range(5) for j in range(5 - i) for k in [4 - i - j]}
        for (i, j, k), c in self.coeffs.items():
            full[f"{i}{j}{k}"] = fmt_rational(c)
        return {"genus": 3, "kind": "plane_quartic", "coeffs": full}

    @classmethod
    def from_json(cls, rec: dict) -> "PlaneQuartic":
        from .algebra.scalars import parse_rational

        out = {}
        for key, v in rec["coeffs"].items():
            c = parse_rational(str(v))
            if c:
                out[(int(key[0]), int(key[1]), int(key[2]))] = c
        return cls(out)

    def pretty(self) -> str:
        parts = []
        for (i, j, k), c in sorted(self.coeffs.items(), reverse=True):
            mono = "*".join(f"{v}^{e}" if e > 1 else v for v, e in (("X", i), ("Y", j), ("Z", k)) if e)
            parts.append(f"{fmt_rational(c)}*{mono}")
        return " + ".join(parts).replace("+ -", "- ") + " = 0"


@dataclass(frozen=True)
class HyperellipticModel:
    """delta * v^2 = f(u) with deg f in {7, 8}."""

    delta: object
    f: Poly

    def __post_init__(self):
        if self.f.degree() not in (7, 8):
            raise ValueError("expected a degree 7 or 8 polynomial")
        if not discriminant(self.f):
            raise ValueError("f is not separable")

    @property
    def genus(self) -> int:
        return 3

    def to_json(self) -> dict:
        from .algebra.serialize import poly_to_json, scalar_to_json

        return {"genus": 3, "kind": "hyperelliptic", "delta": scalar_to_json(self.delta), "f": poly_to_json(self.f)}

    @classmethod
    def from_json(cls, rec: dict) -> "HyperellipticModel":
        from .algebra.serialize import poly_from_json, scalar_from_json

        ring = {"kind": "Q"}
        return cls(scalar_from_json(rec["delta"], ring), poly_from_json(rec["f"], ring))

    def pretty(self) -> str:
        return f"{self.delta}*v^2 = {self.f.pretty('u')}"


@dataclass(frozen=True)
class EllipticFactor:
    """y^2 = x (x^2 + A x + B)."""

    A: object
    B: object

    @property
    def Delta(self):
        return self.A * self.A - 4 * self.B

    @property
    def delta(self):
        return self.A * 0 + 1

    @property
    def f(self) -> Poly:
        return Poly([0 * self.A, self.B, self.A, self.A * 0 + 1])


@dataclass(frozen=True)
class Genus3Pair:
    t: object
    s: object
    elliptic: Tuple[EllipticFactor, EllipticFactor, EllipticFactor]
    H1: Tuple  # (a', b', c'): W^2 Z^2 = a' X^4 + b' Y^4 + c' Z^4
    H2: Tuple  # (d, e, f): 0 = d X^2 + e Y^2 + f Z^2
    Q: PlaneQuartic
    twisting_factors: Tuple
    provenance: dict = field(compare=False)

    def to_json(self) -> dict:
        return {
            "t": fmt_rational(self.t),
            "H": {"quartic_part": [fmt_rational(c) for c in self.H1], "conic": [fmt_rational(c) for c in self.H2]},
            "Q": self.Q.to_json(),
            "twisting_factors": {"T": fmt_rational(self.twisting_factors[0]), "T_prime": fmt_rational(self.twisting_factors[1])},
            "provenance": self.provenance,
        }


def _excluded(t) -> bool:
    return not (t * (t + 1) * (t * t + 1) * (t * t + t + 1))


def elliptic_AB(t):
    s = -(t * t + t + 1)
    u = t * t + 1
    return s, [(-2 * u * s, u * s * s), (4 * u * s, 4 * t * t * u * s * s), (-2 * (t * t + t + 1) * s, (t + 1) ** 2 * u * s * s)]


def h_coefficients(t):
    """(a', b', c') and the conic (d, e, f) of H(t)."""
    s = -(t * t + t + 1)
    a = -(t * t + 1) / (t * (t + 1) * (t * t + t + 1))
    b = -4 * (t * t + 1) / ((t + 1) * (t * t + t + 1))
    c = 1 / t
    return (a, b, c), (-1 + 0 * t, 2 * t, t + 1), s


def quartic_coefficients(t) -> Dict[Monomial, object]:
    return {
        (4, 0, 0): 1 + 0 * t,
        (0, 4, 0): 4 * t * t,
        (0, 0, 4): (t + 1) ** 2,
        (2, 2, 0): 8 * t * t + 4 * t + 8,
        (2, 0, 2): -(4 * t * t + 2 * t + 2),
        (0, 2, 2): 4 * t * t + 4 * t + 8,
    }


def genus3_pair(t) -> Genus3Pair:
    t = Fraction(t)
    if _excluded(t):
        raise ParameterExcluded("need t(t+1)(t^2+1)(t^2+t+1) != 0")
    s, ab = elliptic_AB(t)
    ells = tuple(EllipticFactor(A, B) for A, B in ab)
    if any(not e.B or not e.Delta for e in ells):
        raise ParameterExcluded("some B_i or Delta_i vanishes")
    H1, H2, _ = h_coefficients(t)
    Tp = 64 * (t * t + 1) ** 2 * s**4
    return Genus3Pair(
        t, s, ells, H1, H2, PlaneQuartic(quartic_coefficients(t)), (Fraction(0), Tp),
        _provenance("g3", "Jacobians of H(t) and Q(t) are isomorphic", t=t),
    )


def symbolic_checks() -> Dict[str, bool]:
    """Identities in Q(t): rescalings, the Delta_i closed forms, the twisting value and the 2-torsion points."""
    t = RatFunc.var()
    s = -(t * t + t + 1)
    u = t * t + 1
    out = {}
    # old model of H and the rescaling W -> k W
    a = 4 * t * (t + 1) * u**3 * s**5
    b = 16 * t * t * (t + 1) * u**3 * s**5
    c = 4 * t * (t + 1) ** 2 * u**2 * s**6
    d, e, f = 1 / (-2 * t * (t + 1) * u * s * s), 1 / ((t + 1) * u * s * s), 1 / (2 * t * u * s * s)
    k = 2 * t * (t + 1) * u * s**3
    (a1, b1, c1), (d1, e1, f1), _ = h_coefficients(t)
    out["H1_rescaling"] = (a / k**2, b / k**2, c / k**2) == (a1, b1, c1)
    m = 2 * t * (t + 1) * u * s * s
    out["H2_rescaling"] = (d * m, e * m, f * m) == (d1, e1, f1)
    out["a_over_b"] = a / b == 1 / (4 * t)
    # old quartic divided by (t^2+1) s^2
    _, ab = elliptic_AB(t)
    dp = 4 * u * (2 * t * t + t + 2) * s * s
    ep = -2 * u * (2 * t * t + t + 1) * s * s
    fp = 4 * u * (t * t + t + 2) * s * s
    old = [ab[0][1], ab[1][1], ab[2][1], dp, ep, fp]
    q = quartic_coefficients(t)
    new = [q[(4, 0, 0)], q[(0, 4, 0)], q[(0, 0, 4)], q[(2, 2, 0)], q[(2, 0, 2)], q[(0, 2, 2)]]
    out["Q_rescaling"] = all(o / (u * s * s) == n for o, n in zip(old, new))
    closed = [4 * t * t * u * s * s, 16 * u * s * s, 4 * t * t * s * s]
    out["Delta_closed_forms"] = all(A * A - 4 * B == D for (A, B), D in zip(ab, closed))
    Tp_formula = -64 * u**2 * (t * t + t + 1) * s**3
    Tp = 64 * u**2 * s**4
    out["T_prime_value"] = Tp_formula == Tp
    out["T_prime_square"] = is_square_ratfunc(Tp) and bool(Tp)
    out["two_torsion_points"] = _two_torsion_check(t, s, u, ab)
    return out


def _two_torsion_check(t, s, u, ab) -> bool:
    """x = alpha + beta r with r^2 = t^2 + 1 satisfies x^2 + A x + B = 0."""
    pts = [(u * s, -t * s), (-2 * u * s, -2 * s), ((t * t + t + 1) * s - t * s, 0 * t)]
    ok = True
    for (al, be), (A, B) in zip(pts, ab):
        # (al + be r)^2 + A (al + be r) + B, reduced with r^2 = u
        c0 = al * al + be * be * u + A * al + B
        c1 = 2 * al * be + A * be
        ok &= not c0 and not c1
    return ok


# -- the octic model ------------------------------------------------------------------


def find_conic_point(coeffs: Tuple, search_height: int = 200) -> Tuple[int, int, int]:
    """A nonzero integer point on d X^2 + e Y^2 + f Z^2 = 0 of height at most search_height."""
    d, e, f = (Fraction(c) for c in coeffs)
    for h in range(1, search_height + 1):
        for x, y, z in iproduct(range(-h, h + 1), repeat=3):
            if max(abs(x), abs(y), abs(z)) != h or gcd(gcd(x, y), z) != 1:
                continue
            if d * x * x + e * y * y + f * z * z == 0:
                return x, y, z
    raise NoRationalPoint(f"no point of height <= {search_height}")


def parametrize_conic(coeffs: Tuple, point: Tuple) -> Tuple[Poly, Poly, Poly]:
    """Quadratics (X(u), Y(u), Z(u)) sweeping the conic through the lines at the given point.

    Uses P(u) = Q(D) P0 - 2 B(P0, D) D for a line direction D(u) chosen
    linear in u and independent of P0.
    """
    d, e, f = (Fraction(c) for c in coeffs)
    P0 = [Fraction(c) for c in point]
    basis = [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
    # two directions completing P0 to a basis
    dirs = [v for v in basis if not _parallel(v, P0)][:2]
    D = [Poly([Fraction(dirs[1][i]), Fraction(dirs[0][i])]) for i in range(3)]  # u * dir0 + dir1
    w = (d, e, f)
    QD = sum((D[i] * D[i] * w[i] for i in range(3)), Poly.zero())
    BPD = sum((D[i] * (P0[i] * w[i]) for i in range(3)), Poly.zero())
    return tuple(QD * P0[i] - BPD * D[i] * 2 for i in range(3))


def _parallel(v, w) -> bool:
    return all(v[i] * w[j] == v[j] * w[i] for i in range(3) for j in range(3))


def primitive_part(N: Poly) -> Tuple[Fraction, Poly]:
    """N = kappa * N0 with kappa > 0 and N0 a primitive integer polynomial."""
    from math import lcm

    den = 1
    for c in N.c:
        den = lcm(den, Fraction(c).denominator)
    ints = [int(Fraction(c) * den) for c in N.c]
    g = 0
    for v in ints:
        g = gcd(g, v)
    return Fraction(g, den), Poly([Fraction(v, g) for v in ints])


# (X, Y, Z) = (2u^2 + 2, u^2 - 2u - 1, u^2 + 2u - 1) on the t = 1 conic; gives the published octic normalization
PUBLISHED_PARAM_T1 = (Poly([2, 0, 2]), Poly([-1, -2, 1]), Poly([-1, 2, 1]))


def hyperelliptic_octic_model(t, search_height: int = 200, param: Optional[Tuple[Poly, Poly, Poly]] = None) -> HyperellipticModel:
    """delta v^2 = f8(u) from a parametrization of the conic of H(t).

    With (X, Y, Z) quadratics in u and W = v / Z^2, the first equation becomes
    v^2 = a' X^4 + b' Y^4 + c' Z^4 = kappa N0; delta is the squarefree part of kappa.
    """
    pair = genus3_pair(t)
    (a, b, c), conic = pair.H1, pair.H2
    if param is None:
        param = parametrize_conic(conic, find_conic_point(conic, search_height))
    X, Y, Z = param
    if X * X * conic[0] + Y * Y * conic[1] + Z * Z * conic[2]:
        raise ValueError("the parametrization does not lie on the conic")
    N = X**4 * a + Y**4 * b + Z**4 * c
    kappa, N0 = primitive_part(N)
    delta = Fraction(squarefree_part(kappa))
    return HyperellipticModel(delta, N0)


# -- L-polynomial verification -----------------------------------------------------


def elliptic_lpolys(pair: Genus3Pair, p: int) -> List[Tuple[int, int, int]]:
    from .ffverify import count_hyperelliptic

    out = []
    for E in pair.elliptic:
        N = count_hyperelliptic(1, E.f, p)
        out.append((p, -(p + 1 - N), 1))
    return out


def _polymul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return tuple(out)


@dataclass(frozen=True)
class Genus3Verification:
    t: object
    p: int
    elliptic_product: Tuple[int, ...]
    quartic: Tuple[int, ...]
    octic: Optional[Tuple[int, ...]]

    @property
    def holds(self) -> bool:
        ok = self.quartic == self.elliptic_product
        return ok and (self.octic is None or self.octic == self.quartic)

    def to_json(self) -> dict:
        return {
            "t": fmt_rational(self.t),
            "p": self.p,
            "evidence": "equal L-polynomials (necessary condition for isogeny)",
            "elliptic_product": list(self.elliptic_product),
            "quartic": list(self.quartic),
            "octic": list(self.octic) if self.octic is not None else None,
            "holds": self.holds,
        }


def quartic_is_smooth_mod_p(Q: PlaneQuartic, p: int) -> bool:
    """No F_p point where the quartic and its gradient all vanish."""
    from .ffverify import _reduce_scalar

    terms = {m: _reduce_scalar(c, p) for m, c in Q.coeffs.items()}

    def ev(x, y, z, dv=None):
        acc = 0
        for (i, j, k), c in terms.items():
            e = [i, j, k]
            coef = c
            if dv is not None:
                coef *= e[dv]
                if not coef:
                    continue
                e[dv] -= 1
            acc += coef * pow(x, e[0], p) * pow(y, e[1], p) * pow(z, e[2], p)
        return acc % p

    pts = [(x, y, 1) for x in range(p) for y in range(p)] + [(x, 1, 0) for x in range(p)] + [(1, 0, 0)]
    for P in pts:
        if ev(*P) == 0 and all(ev(*P, dv=i) == 0 for i in range(3)):
            return False
    return True


def verify_genus3_lpoly(t, p: int, octic: Optional[HyperellipticModel] = None, use_octic: bool = True) -> Genus3Verification:
    from .ffverify import BadReduction, frobenius_charpoly

    pair = genus3_pair(t)
    tt = Fraction(t)
    if p == 2 or (tt.denominator % p == 0) or (tt * (tt + 1) * (tt * tt + 1) * (tt * tt + tt + 1)).numerator % p == 0:
        raise BadReduction(f"{p} is a bad prime for t = {t}")
    if not quartic_is_smooth_mod_p(pair.Q, p):
        raise BadReduction(f"Q(t) is singular mod {p}")
    prod = (1,)
    for lp in elliptic_lpolys(pair, p):
        prod = _polymul(prod, lp)
    quartic = frobenius_charpoly(pair.Q, p, genus=3).coeffs
    oc = None
    if use_octic:
        if octic is None:
            try:
                octic = hyperelliptic_octic_model(t)
            except NoRationalPoint:
                octic = None
        if octic is not None:
            oc = frobenius_charpoly(octic, p, genus=3).coeffs
    return Genus3Verification(t, p, prod, quartic, oc)
