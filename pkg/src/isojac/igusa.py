"""Igusa invariants of genus-2 curves and the geometric-isomorphism test.

The invariants are produced from the Clebsch invariants of the binary sextic,
which are obtained by transvectants (Ueberschiebungen).  The transvectant
chain is run once on a sextic with indeterminate coefficients; the resulting
polynomials are cached and then evaluated in whatever ring the curve lives
in.  Every J_{2i} has only powers of 2 in its denominators, so evaluation
works in every odd characteristic (including 3 and 5, where the transvectant
chain itself would divide by zero).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Dict, List, Sequence, Tuple

from .algebra.poly import Poly
from .algebra.scalars import Fp

Formula = Dict[Tuple[int, ...], Fraction]


# -- transvectants on binary forms -------------------------------------------
# A form of degree n is a list c with c[k] the coefficient of x^k y^(n-k).


def _dx(f):
    return [k * f[k] for k in range(1, len(f))]


def _dy(f):
    n = len(f) - 1
    return [(n - k) * f[k] for k in range(n)]


def _fmul(f, g, zero):
    out = [zero] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] = out[i + j] + a * b
    return out


def transvectant(f: Sequence, g: Sequence, k: int, zero, scalar=lambda q: q):
    """(f, g)_k with the normalization (n-k)!(m-k)!/(n! m!)."""
    n, m = len(f) - 1, len(g) - 1
    out = [zero] * (n + m - 2 * k + 1)
    for j in range(k + 1):
        F = list(f)
        for _ in range(k - j):
            F = _dx(F)
        for _ in range(j):
            F = _dy(F)
        G = list(g)
        for _ in range(j):
            G = _dx(G)
        for _ in range(k - j):
            G = _dy(G)
        c = comb(k, j) * (-1) ** j
        out = [o + c * p for o, p in zip(out, _fmul(F, G, zero))]
    s = scalar(Fraction(factorial(n - k) * factorial(m - k), factorial(n) * factorial(m)))
    return [o * s for o in out]


def clebsch_from_form(f: Sequence, zero, scalar=lambda q: q):
    """Clebsch invariants A, B, C, D of a binary sextic."""
    tr = lambda u, v, k: transvectant(u, v, k, zero, scalar)  # noqa: E731
    i = tr(f, f, 4)
    delta = tr(i, i, 2)
    y1 = tr(f, i, 4)
    y2 = tr(i, y1, 2)
    y3 = tr(i, y2, 2)
    return tr(f, f, 6)[0], tr(i, i, 4)[0], tr(i, delta, 4)[0], tr(y3, y1, 2)[0]


def igusa_clebsch_from_clebsch(A, B, C, D):
    I2 = -120 * A
    I4 = -720 * A**2 + 6750 * B
    I6 = 8640 * A**3 - 108000 * A * B + 202500 * C
    I10 = (
        -62208 * A**5 + 972000 * A**3 * B + 1620000 * A**2 * C
        - 3037500 * A * B**2 - 6075000 * B * C - 4556250 * D
    )
    return I2, I4, I6, I10


def igusa_from_igusa_clebsch(I2, I4, I6, I10):
    """Igusa's J_2..J_10 (unscaled) from I_2, I_4, I_6, I_10 over a ring where 2, 3 are units."""
    J2 = I2 / 8
    J4 = (4 * J2**2 - I4) / 96
    J6 = (8 * J2**3 - 160 * J2 * J4 - I6) / 576
    J8 = (J2 * J6 - J4**2) / 4
    J10 = I10 / 4096
    return J2, J4, J6, J8, J10


@lru_cache(maxsize=None)
def igusa_formulas() -> Tuple[Formula, ...]:
    """J_2..J_10 as polynomials in the sextic coefficients a_0..a_6 (a_k at x^k)."""
    from sympy import QQ
    from sympy.polys.rings import ring

    R, *a = ring("a0:7", QQ)
    A, B, C, D = clebsch_from_form(list(a), R(0), lambda q: QQ(q.numerator, q.denominator))
    Js = igusa_from_igusa_clebsch(*igusa_clebsch_from_clebsch(A, B, C, D))
    out = []
    for i, J in enumerate(Js, start=1):
        form = {}
        for mon, c in J.items():
            form[tuple(mon)] = Fraction(int(c.numerator), int(c.denominator))
        out.append(form)
    return tuple(out)


def evaluate_formula(form: Formula, coeffs: Sequence, one):
    """Evaluate a polynomial in a_0..a_6 at the given coefficients (in any ring)."""
    powers: List[List] = []
    for c in coeffs:
        pw = [one]
        for _ in range(10):
            pw.append(pw[-1] * c)
        powers.append(pw)
    acc = one * 0
    for mon, q in form.items():
        term = one
        for k, e in enumerate(mon):
            if e:
                term = term * powers[k][e]
        acc = acc + _scale(term, q)
    return acc


def _scale(x, q: Fraction):
    if q.denominator == 1:
        return x * q.numerator
    return x * q


# -- public API ---------------------------------------------------------------


@dataclass(frozen=True)
class IgusaVector:
    """Igusa invariants (J2, J4, J6, J8, J10) of a genus-2 curve."""

    J: Tuple

    def __iter__(self):
        return iter(self.J)

    def __getitem__(self, i):
        return self.J[i]

    def syzygy_holds(self) -> bool:
        J2, J4, J6, J8, _ = self.J
        return 4 * J8 == J2 * J6 - J4 * J4

    def to_json(self):
        from .algebra.scalars import fmt_rational

        return [fmt_rational(j) if isinstance(j, (int, Fraction)) else str(j) for j in self.J]


def sextic_coeffs(f: Poly) -> List:
    if not 5 <= f.degree() <= 6:
        raise ValueError("expected a polynomial of degree 5 or 6")
    return [f[k] for k in range(7)]


def igusa_of_sextic(f: Poly) -> IgusaVector:
    coeffs = sextic_coeffs(f)
    one = f.lc() * 0 + 1
    if isinstance(one, Fp) or hasattr(one, "F"):
        p = one.p if isinstance(one, Fp) else one.F.p
        if p == 2:
            raise ValueError("characteristic 2 is not supported")
    return IgusaVector(tuple(evaluate_formula(F, coeffs, one) for F in igusa_formulas()))


def igusa_invariants(curve) -> IgusaVector:
    """Igusa invariants of delta*y^2 = f, computed from y^2 = delta*f."""
    f = curve.f * curve.delta
    if not f.is_squarefree():
        raise ValueError("f is not separable")
    return igusa_of_sextic(f)


WEIGHTS = (1, 2, 3, 4, 5)


def same_weighted_point(u: Sequence, v: Sequence, weights: Sequence[int] = WEIGHTS) -> bool:
    """Equality of two points of weighted projective space with the given weights."""
    zu = [x == 0 for x in u]
    zv = [x == 0 for x in v]
    if zu != zv:
        return False
    idx = [k for k, z in enumerate(zu) if not z]
    for a_ in range(len(idx)):
        for b_ in range(a_ + 1, len(idx)):
            i, j = idx[a_], idx[b_]
            wi, wj = weights[i], weights[j]
            if u[i] ** wj * v[j] ** wi != v[i] ** wj * u[j] ** wi:
                return False
    return True


def geometrically_isomorphic(c1, c2) -> bool:
    return same_weighted_point(tuple(igusa_invariants(c1)), tuple(igusa_invariants(c2)))


# -- root-based oracle ---------------------------------------------------------


def igusa_clebsch_from_roots(lead, roots: Sequence):
    """I2, I4, I6, I10 from the leading coefficient and the six roots."""
    from itertools import combinations, permutations

    d = lambda i, j: (roots[i] - roots[j]) ** 2  # noqa: E731
    idx = range(6)
    pairings = []

    def match(rest, acc):
        if not rest:
            pairings.append(acc)
            return
        a0 = rest[0]
        for b in rest[1:]:
            match([r for r in rest if r not in (a0, b)], acc + [(a0, b)])

    match(list(idx), [])
    zero = lead * 0
    I2 = zero
    for pr in pairings:
        term = lead * 0 + 1
        for i, j in pr:
            term = term * d(i, j)
        I2 = I2 + term
    splits = [(list(A), [k for k in idx if k not in A]) for A in combinations(idx, 3) if 0 in A]
    I4 = zero
    I6 = zero
    for A, B in splits:
        base = d(A[0], A[1]) * d(A[1], A[2]) * d(A[2], A[0]) * d(B[0], B[1]) * d(B[1], B[2]) * d(B[2], B[0])
        I4 = I4 + base
        for perm in permutations(B):
            I6 = I6 + base * d(A[0], perm[0]) * d(A[1], perm[1]) * d(A[2], perm[2])
    I10 = lead * 0 + 1
    for i, j in combinations(idx, 2):
        I10 = I10 * d(i, j)
    return lead**2 * I2, lead**4 * I4, lead**6 * I6, lead**10 * I10


def igusa_clebsch_of_sextic(f: Poly):
    """I2, I4, I6, I10 of a sextic via the transvectant route (ring must contain 1/2, 1/3, 1/5)."""
    one = f.lc() * 0 + 1
    A, B, C, D = clebsch_from_form(sextic_coeffs(f), one * 0, lambda q: q)
    return igusa_clebsch_from_clebsch(A, B, C, D)


# -- the R-polynomial certificate for the C(t) family --------------------------


def _family1_twist_coeffs(one: Poly) -> List[Poly]:
    """Coefficients (in t) of (2x^2 - t)(4t^2 x^4 + 4(t^2+t+1)x^2 + 1)."""
    t = Poly([one[0] * 0, one[0]])
    zero = one * 0
    q = [-t, zero, one * 2]
    r = [one, zero, (t * t + t + 1) * 4, zero, t * t * 4]
    f = [zero] * 7
    for i, a in enumerate(q):
        for j, b in enumerate(r):
            f[i + j] = f[i + j] + a * b
    return f


def family1_invariants_in_t(one: Poly) -> List[Poly]:
    """J_2(t), ..., J_10(t) of the twist of C(t), as polynomials over one's ring."""
    coeffs = _family1_twist_coeffs(Poly([1]))
    Js = [evaluate_formula(F, coeffs, Poly([1])) for F in igusa_formulas()]
    if isinstance(one[0], Fraction):
        return Js
    return [J.map(lambda c: one[0] * c) for J in Js]


class InexactDivision(ArithmeticError):
    pass


def _r_poly(J: List[Poly], k: int, den: Poly) -> Poly:
    """(J_{2k}(t) J_2(-t)^k - J_{2k}(-t) J_2(t)^k) / den, exactly."""
    Jm = [j.neg_var() for j in J]
    idx = {2: 1, 3: 2, 5: 4}[k]
    num = J[idx] * Jm[0] ** k - Jm[idx] * J[0] ** k
    try:
        return num.exact_div(den)
    except ArithmeticError as exc:
        raise InexactDivision(f"R_{k} is not divisible by {den}") from exc


def r_polynomials(p: int | None = None) -> Dict[str, Poly]:
    """R_2, R_3 (and R_5 over Z) with the denominators used for each coefficient ring."""
    one = Poly([1]) if p is None else Poly([Fp(1, p)])
    J = family1_invariants_in_t(one)
    t = Poly([one[0] * 0, one[0]])
    tp = t * t + 1
    if p == 3:
        return {
            "R2": _r_poly(J, 2, t * (t * t - 1) ** 2 * tp**7),
            "R3": _r_poly(J, 3, t**3 * tp**9),
        }
    out = {"R2": _r_poly(J, 2, t * tp**3), "R3": _r_poly(J, 3, t**3 * tp**3)}
    if p is None:
        out["R5"] = _r_poly(J, 5, t**3 * tp**7)
    return out


def _as_integers(f: Poly) -> List[int]:
    if any(c.denominator != 1 for c in f.c):
        raise InexactDivision("R-polynomial is not integral")
    return [int(c) for c in f.c]


def _valuation(n: int, p: int) -> int:
    n, e = abs(n), 0
    while n and n % p == 0:
        n //= p
        e += 1
    return e


def r_certificate() -> dict:
    """gcd(Res(R2,R3), Res(R2,R5)) over Z, and gcd(R2,R3) over F_3 and F_11."""
    from math import gcd

    from .algebra.factor import factor_over_base
    from .algebra.resultant import resultant_zz

    Rz = r_polynomials()
    R2, R3, R5 = (_as_integers(Rz[k]) for k in ("R2", "R3", "R5"))
    res23 = resultant_zz(R2, R3)
    res25 = resultant_zz(R2, R5)
    g = gcd(res23, res25)
    e2, e3, e11 = (_valuation(g, p) for p in (2, 3, 11))
    rest = g // (2**e2 * 3**e3 * 11**e11)
    # Multiplying every J_{2i} by 4^i multiplies R_k by 2^(2w) with w = 4, 6, 10.
    d2, d3, d5 = (len(R) - 1 for R in (R2, R3, R5))
    alt = min(_valuation(res23, 2) + 8 * d3 + 12 * d2, _valuation(res25, 2) + 8 * d5 + 20 * d2)

    out = {
        "gcd_resultants": g,
        "two_exponent": e2,
        "two_exponent_if_scaled_by_4_pow_i": alt,
        "odd_part": g // 2**e2,
        "odd_part_factored": {"3": e3, "11": e11, "other": rest},
        "degrees": {"R2": d2, "R3": d3, "R5": d5},
    }
    for p in (3, 11):
        Rp = r_polynomials(p)
        gp = Rp["R2"].gcd(Rp["R3"])
        out[f"gcd_F{p}"] = gp
        out[f"gcd_F{p}_factors"] = [fac for fac, _ in factor_over_base(gp, max_degree=64)] if gp.degree() > 0 else []
    return out
