"""Genus-2 curves delta*y^2 = f, Richelot duals and change-of-variable maps."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product as iproduct
from typing import List, Optional, Sequence, Tuple

from .algebra.etale import EtaleAlgebra, EtaleElement
from .algebra.poly import Poly
from .algebra.resultant import discriminant
from .algebra.scalars import squarefree_part
from .algebra.serialize import poly_from_json, poly_to_json, ring_of, scalar_from_json, scalar_to_json


class CurveError(ValueError):
    pass


class DegenerateFactorization(CurveError):
    pass


class InseparableDual(CurveError):
    pass


class CoefficientDescentFailure(CurveError):
    pass


class DegenerateMap(CurveError):
    pass


class NonIntegralModel(CurveError):
    pass


@dataclass(frozen=True)
class Genus2Curve:
    """The curve delta * y^2 = f with f separable of degree 5 or 6."""

    delta: object
    f: Poly

    def __post_init__(self):
        if not self.delta:
            raise CurveError("delta must be nonzero")
        if not 5 <= self.f.degree() <= 6:
            raise CurveError(f"f has degree {self.f.degree()}, expected 5 or 6")
        if not discriminant(self.f):
            raise CurveError("f is not separable")

    @property
    def ring(self) -> dict:
        return ring_of(self.f.lc())

    def y2_poly(self) -> Poly:
        """F with the same curve written y^2 = F (divide through by delta)."""
        return self.f / self.delta

    def reduce_mod(self, p: int) -> "Genus2Curve":
        from .algebra.scalars import Fp

        return Genus2Curve(Fp(self.delta, p), self.f.map(lambda c: Fp(c, p)))

    def to_json(self) -> dict:
        return {
            "genus": 2,
            "delta": scalar_to_json(self.delta),
            "f": poly_to_json(self.f),
            "ring": self.ring,
        }

    @classmethod
    def from_json(cls, rec: dict) -> "Genus2Curve":
        ring = rec.get("ring", {"kind": "Q"})
        if rec.get("genus", 2) != 2:
            raise CurveError("not a genus-2 record")
        return cls(scalar_from_json(rec["delta"], ring), poly_from_json(rec["f"], ring))

    def pretty(self) -> str:
        d = self.delta
        lhs = "y^2" if d == 1 else f"{d}*y^2"
        return f"{lhs} = {self.f.pretty('x')}"


@dataclass(frozen=True)
class QuadFactorization:
    """f = lc(f) * g1 g2 g3 with each g monic of degree 2 (or 1 for a root at infinity).

    Coefficients live in the base ring or in the étale algebra ``algebra``.
    ``pairing`` records which root indices were grouped (index 6 stands for
    the point at infinity of a quintic), relative to ``roots``.
    """

    g: Tuple[Poly, Poly, Poly]
    algebra: Optional[EtaleAlgebra] = None
    pairing: Optional[Tuple[Tuple[int, int], ...]] = None
    roots: Optional[Tuple] = field(default=None, compare=False)

    @property
    def t(self):
        return tuple(-gi[1] if gi.degree() == 2 else None for gi in self.g)

    @property
    def n(self):
        return tuple(gi[0] if gi.degree() == 2 else None for gi in self.g)

    def to_json(self) -> dict:
        out = {"pairing": [list(p) for p in self.pairing] if self.pairing else None}
        out["extension_modulus"] = poly_to_json(self.algebra.modulus) if self.algebra else None
        return out


@dataclass(frozen=True)
class RichelotResult:
    """``dual`` is a model over the base ring whose Jacobian is K-isogenous to the source's.

    When d is not in K, the literal equation d*delta*y^2 = h1 h2 h3 rewritten as
    y^2 = d*delta*h1 h2 h3 still has coefficients in K, but it is the quadratic
    twist of ``dual`` by d^2; :meth:`literal_model` returns that form.
    """

    d: object
    h: Tuple[Poly, Poly, Poly]
    dual: Genus2Curve
    source_delta: object = None

    @property
    def d_in_base(self) -> bool:
        return _is_base(self.d)

    def literal_model(self) -> Genus2Curve:
        H = self.h[0] * self.h[1] * self.h[2] * (self.d * self.source_delta)
        if not all(_is_base(x) for x in H.c):
            raise CoefficientDescentFailure("d*delta*h1*h2*h3 does not descend")
        f = Poly([_base(x) for x in H.c])
        return Genus2Curve(f.lc() * 0 + 1, f)


def _is_base(c) -> bool:
    return not isinstance(c, EtaleElement) or c.is_base()


def _base(c):
    return c.base_value() if isinstance(c, EtaleElement) else c


def _det3(m):
    return (
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    )


def richelot_determinant(g: Sequence[Poly]):
    """The determinant |1 t_i n_i| written for g_i = a x^2 + b x + c as -|a b c|."""
    return -_det3([[gi[2], gi[1], gi[0]] for gi in g])


def richelot_dual(c: Genus2Curve, fact: QuadFactorization) -> RichelotResult:
    lc = c.f.lc()
    F = c.f / lc
    delta = c.delta / lc
    g1, g2, g3 = fact.g
    prod = g1 * g2 * g3
    if prod != F:
        raise CurveError("the quadratics do not multiply to f")
    d = richelot_determinant(fact.g)
    if not d:
        raise DegenerateFactorization("the Richelot determinant vanishes")
    h1 = g3 * g2.derivative() - g2 * g3.derivative()
    h2 = g1 * g3.derivative() - g3 * g1.derivative()
    h3 = g2 * g1.derivative() - g1 * g2.derivative()
    H = h1 * h2 * h3
    # d lies in K when the Galois action permutes the g_i evenly; otherwise d and H
    # both change sign, and the model delta*y^2 = H/d descends instead.
    if _is_base(d) and all(_is_base(x) for x in H.c):
        dual_delta, dual_f = _base(d) * delta, Poly([_base(x) for x in H.c])
    else:
        Hd = H / d
        if not all(_is_base(x) for x in Hd.c):
            raise CoefficientDescentFailure("dual coefficients do not descend to the base ring")
        dual_delta, dual_f = delta, Poly([_base(x) for x in Hd.c])
    if not 5 <= dual_f.degree() <= 6:
        raise InseparableDual(f"dual polynomial has degree {dual_f.degree()}")
    if not discriminant(dual_f):
        raise InseparableDual("h1*h2*h3 is not separable")
    return RichelotResult(d, (h1, h2, h3), Genus2Curve(dual_delta, dual_f), delta)


# -- kernels -------------------------------------------------------------------


def perfect_matchings(items: Sequence[int]) -> List[Tuple[Tuple[int, int], ...]]:
    items = list(items)
    if not items:
        return [()]
    a, rest = items[0], items[1:]
    out = []
    for b in rest:
        remaining = [x for x in rest if x != b]
        for m in perfect_matchings(remaining):
            out.append(((a, b),) + m)
    return out


def _normalized_triple(g: Poly):
    cs = [g[2], g[1], g[0]]
    lead = next(x for x in cs if x != 0)
    return [x / lead for x in cs]


def is_galois_stable(gs: Sequence[Poly]) -> bool:
    """True when the set {g1, g2, g3} is fixed by the Galois action.

    Equivalent to the product of the linear forms a_i W + b_i Y + c_i Z
    (coefficients normalized to a leading 1) having coefficients in the base.
    """
    forms = [_normalized_triple(g) for g in gs]
    coeffs = {}
    for choice in iproduct(range(3), repeat=3):
        term = forms[0][choice[0]] * forms[1][choice[1]] * forms[2][choice[2]]
        key = tuple(sorted(choice))
        coeffs[key] = coeffs[key] + term if key in coeffs else term
    return all(_is_base(v) for v in coeffs.values())


def _pair_poly(roots, i: int, j: int, one) -> Poly:
    if j == 6:
        return Poly([-roots[i], one])
    if i == 6:
        return Poly([-roots[j], one])
    return Poly([roots[i] * roots[j], -(roots[i] + roots[j]), one])


def factorization_from_pairing(roots, pairing, algebra=None) -> QuadFactorization:
    one = roots[0] * 0 + 1
    gs = tuple(_pair_poly(roots, i, j, one) for i, j in pairing)
    return QuadFactorization(gs, algebra, tuple(pairing), tuple(roots))


def enumerate_kernels(c: Genus2Curve, max_degree: int = 6) -> List[QuadFactorization]:
    """All Galois-stable factorizations of f into three quadratics (curves over Q)."""
    from .algebra.numfield import splitting_field

    if c.ring["kind"] != "Q":
        raise CurveError("kernel enumeration is implemented for curves over Q")
    M, roots = splitting_field(c.f, max_degree=max_degree)
    if M is None:
        roots = [Fraction(r) for r in roots]
    points = list(range(len(roots))) + ([6] if c.f.degree() == 5 else [])
    out = []
    for m in perfect_matchings(points):
        fac = factorization_from_pairing(roots, m, M)
        if is_galois_stable(fac.g):
            out.append(fac)
    return out


GEOMETRIC_KERNEL_COUNT = len(perfect_matchings(range(6)))


# -- models ----------------------------------------------------------------------


def mobius_transform(c: Genus2Curve, mp, scale=1, twist=1, normalize_delta: bool = True) -> Genus2Curve:
    """Substitute x -> (a x + b)/(cc x + dd), clear denominators, scale and twist.

    The new polynomial is twist * scale * (cc x + dd)^6 * f((a x + b)/(cc x + dd)),
    and the new delta is delta * scale.  Over Q, delta is then reduced to its
    signed squarefree part (an isomorphic model).
    """
    a, b, cc, dd = mp
    if a * dd - b * cc == 0:
        raise DegenerateMap("ad - bc = 0")
    if not scale or not twist:
        raise DegenerateMap("scale and twist must be nonzero")
    num = Poly([b, a])
    den = Poly([dd, cc])
    out = Poly.zero()
    for k, coef in enumerate(c.f.c):
        if coef:
            out = out + num**k * den ** (6 - k) * coef
    out = out * (scale * twist)
    delta = c.delta * scale
    if normalize_delta and isinstance(delta, (int, Fraction)):
        delta = Fraction(squarefree_part(delta))
    if out.degree() < 5:
        raise DegenerateMap("degree dropped below 5")
    return Genus2Curve(delta, out)


def normalize_delta(c: Genus2Curve) -> Genus2Curve:
    return mobius_transform(c, (1, 0, 0, 1))


@dataclass(frozen=True)
class CrossTermModel:
    """y^2 + q(x) y = g(x)."""

    q: Poly
    g: Poly

    def to_curve(self) -> Genus2Curve:
        """Back to y^2 = 4 g + q^2 (via y -> (y - q)/2)."""
        return Genus2Curve(Fraction(1), self.g * 4 + self.q * self.q)

    def pretty(self) -> str:
        return f"y^2 + ({self.q.pretty('x')})*y = {self.g.pretty('x')}"


def complete_square_form(c: Genus2Curve, q: Poly, integral: bool = False) -> CrossTermModel:
    """The model y^2 + q y = g equivalent to y^2 = f via y -> 2y + q."""
    if q.degree() > 3:
        raise CurveError("q must have degree at most 3")
    if c.delta != 1:
        raise CurveError("complete_square_form expects a curve y^2 = f")
    g = (c.f - q * q) / 4
    if integral and any(Fraction(x).denominator != 1 for x in list(g.c) + list(q.c)):
        raise NonIntegralModel("the model y^2 + q y = g is not integral")
    return CrossTermModel(q, g)


# -- Möbius search -----------------------------------------------------------------


@dataclass(frozen=True)
class MobiusMatch:
    """mobius_transform(c1, mp, scale, twist) reproduces c2 exactly (delta included)."""

    mp: Tuple
    scale: Fraction
    twist: Fraction


def _roots_fp2(f: Poly, p: int):
    """Roots of the rational polynomial f in F_{p^2}, or None if some factor mod p has degree > 2."""
    import sympy
    from .algebra.scalars import GF, sqrt_fq

    x = sympy.Symbol("x")
    cs = [int(Fraction(c).numerator * pow(Fraction(c).denominator, -1, p)) % p for c in f.c]
    sp = sympy.Poly(list(reversed(cs)), x, modulus=p)
    _, facs = sp.factor_list()
    F = GF(p, 2)
    roots = []
    for g, e in facs:
        if e != 1 or g.degree() > 2:
            return None
        co = [int(v) % p for v in g.all_coeffs()]
        if g.degree() == 1:
            roots.append(F(-co[1] * pow(co[0], -1, p)))
            continue
        a, b, c = (F(v) for v in co)
        r = sqrt_fq(b * b - a * c * 4)
        roots += [(-b + r) / (a * 2), (-b - r) / (a * 2)]
    return roots


def _to_zero_inf_one(z1, z2, z3):
    return [[z3 - z2, -z1 * (z3 - z2)], [z3 - z1, -z2 * (z3 - z1)]]


def _matmul(m, n):
    return [[m[0][0] * n[0][0] + m[0][1] * n[1][0], m[0][0] * n[0][1] + m[0][1] * n[1][1]],
            [m[1][0] * n[0][0] + m[1][1] * n[1][0], m[1][0] * n[0][1] + m[1][1] * n[1][1]]]


def _adj(m):
    return [[m[1][1], -m[0][1]], [-m[1][0], m[0][0]]]


def _mobius_candidates_mod_p(f1: Poly, f2: Poly, p: int):
    """Normalized (a, b, c, d) over F_p sending the roots of f2 onto those of f1."""
    from itertools import permutations

    R1, R2 = _roots_fp2(f1, p), _roots_fp2(f2, p)
    if R1 is None or R2 is None or len(R1) != 6 or len(R2) != 6:
        return None
    S1 = set(R1)
    Mz = _to_zero_inf_one(*R2[:3])
    out = set()
    for w in permutations(R1, 3):
        m = _matmul(_adj(_to_zero_inf_one(*w)), Mz)
        (a, b), (c, d) = m
        if all((c * z + d) and (a * z + b) / (c * z + d) in S1 for z in R2):
            flat = [a, b, c, d]
            piv = next(i for i, v in enumerate(flat) if v)
            flat = [v / flat[piv] for v in flat]
            if all(v.c[1] == 0 for v in flat):
                out.add(tuple(v.c[0] for v in flat))
    return out


def _rational_reconstruct(a: int, m: int) -> Optional[Fraction]:
    import math

    bound = math.isqrt(m // 2)
    r0, r1, s0, s1 = m, a % m, 0, 1
    while r1 > bound:
        q = r0 // r1
        r0, r1, s0, s1 = r1, r0 - q * r1, s1, s0 - q * s1
    if s1 == 0 or abs(s1) > bound:
        return None
    return Fraction(r1, s1)


def _apply_mobius(f: Poly, mp) -> Poly:
    a, b, cc, dd = mp
    num, den = Poly([b, a]), Poly([dd, cc])
    out = Poly.zero()
    for k, coef in enumerate(f.c):
        if coef:
            out = out + num**k * den ** (6 - k) * coef
    return out


def find_mobius(c1: Genus2Curve, c2: Genus2Curve, max_primes: int = 40, start: int = 1000) -> Optional[MobiusMatch]:
    """A rational change of variables carrying sextic c1 to c2 (up to a quadratic twist).

    Roots are matched modulo primes at which both sextics split over F_{p^2};
    the normalized matrices are combined by CRT and rational reconstruction.
    Returns None when no unique map is found.
    """
    from sympy import nextprime

    if c1.f.degree() != 6 or c2.f.degree() != 6:
        raise CurveError("find_mobius handles sextics")
    f1, f2 = c1.f, c2.f
    residues, modulus, used, p = None, 1, 0, start
    while used < max_primes:
        p = int(nextprime(p))
        try:
            cands = _mobius_candidates_mod_p(f1, f2, p)
        except (ZeroDivisionError, ValueError):
            continue
        if cands is None:
            continue
        if len(cands) != 1:
            return None
        cand = next(iter(cands))
        used += 1
        if residues is None:
            residues = list(cand)
        else:
            residues = [_crt(r, modulus, v, p) for r, v in zip(residues, cand)]
        modulus *= p
        mp = [_rational_reconstruct(r, modulus) for r in residues]
        if None in mp:
            continue
        g = _apply_mobius(f1, mp)
        if g.degree() != 6:
            continue
        lam = f2.lc() / g.lc()
        if g * lam == f2:
            # delta1 y^2 = g is c1; c2 is delta2 y^2 = lam * g
            ratio = c2.delta / (c1.delta * lam)
            sq = Fraction(squarefree_part(ratio))
            return MobiusMatch(tuple(mp), lam / sq, sq)
    return None


def _crt(r1: int, m1: int, r2: int, m2: int) -> int:
    return (r1 + m1 * ((r2 - r1) * pow(m1, -1, m2) % m2)) % (m1 * m2)
