"""Point counts over finite fields, Frobenius characteristic polynomials and simplicity tests.

Elements of F_q (q = p^k) are encoded as integers n = sum d_i p^i, where the
d_i are the coefficients of the element in F_p[X]/(m) with m the field
modulus used by :class:`isojac.algebra.scalars.FiniteField`.  Multiplication
goes through discrete log and exp tables; addition is digitwise.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from .algebra.etale import EtaleAlgebra
from .algebra.factor import is_irreducible
from .algebra.poly import Poly
from .algebra.scalars import Fp, FqElem, _polymulmod, legendre, smallest_irreducible

MAX_HYPERELLIPTIC_Q = 10**6
MAX_QUARTIC_Q = 10**4
SIMPLICITY_POWERS = (2, 3, 4, 5, 6, 8, 10, 12)


class BadReduction(ValueError):
    pass


class UnsupportedCharacteristic(ValueError):
    pass


# -- F_q tables ---------------------------------------------------------------------


class FqTables:
    def __init__(self, p: int, k: int):
        if p == 2:
            raise UnsupportedCharacteristic("characteristic 2 is not supported")
        self.p, self.k, self.q = p, k, p**k
        self.pw = np.array([p**i for i in range(k)], dtype=np.int64)
        idx = np.arange(self.q, dtype=np.int64)
        self.digits = np.stack([(idx // p**i) % p for i in range(k)], axis=1)
        self.exp, self.log = self._build_log_tables()

    def _build_log_tables(self):
        p, k, q = self.p, self.k, self.q
        mod = smallest_irreducible(p, k)
        for g in range(2, q):
            gd = tuple(int(d) for d in self.digits[g])
            exp = np.empty(q - 1, dtype=np.int64)
            cur = (1,) + (0,) * (k - 1)
            ok = True
            for i in range(q - 1):
                n = sum(d * p**j for j, d in enumerate(cur))
                if i and n == 1:
                    ok = False
                    break
                exp[i] = n
                cur = _polymulmod(cur, gd, mod, p) if k > 1 else ((cur[0] * gd[0]) % p,)
            if ok:
                log = np.full(q, -1, dtype=np.int64)
                log[exp] = np.arange(q - 1, dtype=np.int64)
                return exp, log
        raise RuntimeError("no primitive element found")

    def const(self, c: int) -> int:
        return int(c) % self.p

    def add(self, a, b):
        if self.k == 1:
            return (a + b) % self.p
        return ((self.digits[a] + self.digits[b]) % self.p) @ self.pw

    def neg(self, a):
        if self.k == 1:
            return (-a) % self.p
        return ((-self.digits[a]) % self.p) @ self.pw

    def mul(self, a, b):
        if self.k == 1:
            return (np.asarray(a, dtype=np.int64) * b) % self.p
        a, b = np.broadcast_arrays(np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64))
        out = self.exp[(self.log[a] + self.log[b]) % (self.q - 1)]
        return np.where((a == 0) | (b == 0), 0, out)

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of 0 in F_q")
        return int(self.exp[(-self.log[a]) % (self.q - 1)])

    def chi(self, a):
        """Quadratic character: 0, 1 or -1."""
        a = np.asarray(a, dtype=np.int64)
        lg = self.log[a]
        return np.where(a == 0, 0, np.where(lg % 2 == 0, 1, -1))

    def sqrt(self, a):
        """A square root where one exists, else -1."""
        a = np.asarray(a, dtype=np.int64)
        lg = self.log[a]
        root = self.exp[(lg // 2) % (self.q - 1)]
        return np.where(a == 0, 0, np.where(lg % 2 == 0, root, -1))

    def horner(self, coeffs: Sequence[int], xs):
        acc = np.zeros_like(xs)
        for c in reversed(coeffs):
            acc = self.add(self.mul(acc, xs), np.full_like(xs, c))
        return acc


@lru_cache(maxsize=32)
def fq_tables(p: int, k: int) -> FqTables:
    return FqTables(p, k)


def _prime_power(q: int) -> Tuple[int, int]:
    from sympy import factorint

    f = factorint(q)
    if len(f) != 1:
        raise ValueError(f"{q} is not a prime power")
    (p, k), = f.items()
    return int(p), int(k)


def _reduce_scalar(c, p: int) -> int:
    if isinstance(c, Fp):
        if c.p != p:
            raise BadReduction(f"coefficient lives in F_{c.p}, not F_{p}")
        return c.v
    if isinstance(c, FqElem):
        if c.F.k != 1 and any(c.c[1:]):
            raise ValueError("curves over non-prime fields are not supported for counting")
        return int(c.c[0]) % p
    c = Fraction(c)
    if c.denominator % p == 0:
        raise BadReduction(f"denominator divisible by {p}")
    return c.numerator * pow(c.denominator, -1, p) % p


def _reduce_poly(f: Poly, p: int) -> List[int]:
    return [_reduce_scalar(c, p) for c in f.c]


def _disc_mod_p(cs: List[int], p: int) -> int:
    from .algebra.resultant import discriminant

    f = Poly([Fp(c, p) for c in cs])
    if f.degree() < 1 or not f.derivative():
        return 0
    return discriminant(f).v


# -- counting -----------------------------------------------------------------------


def count_hyperelliptic(delta, f: Poly, q: int) -> int:
    """Points on the smooth model of delta y^2 = f over F_q (deg f >= 3)."""
    p, k = _prime_power(q)
    if q > MAX_HYPERELLIPTIC_Q:
        raise ValueError("field too large for enumeration")
    cs = _reduce_poly(f, p)
    d = _reduce_scalar(delta, p)
    while cs and cs[-1] == 0:
        cs.pop()
    deg = len(cs) - 1
    nominal = f.degree() + f.degree() % 2  # degree of the binary form
    # one root of the binary form may move to infinity; more is a singularity
    if d == 0 or deg < nominal - 1 or _disc_mod_p(cs, p) == 0:
        raise BadReduction(f"bad reduction at {p}")
    F = fq_tables(p, k)
    xs = np.arange(q, dtype=np.int64)
    vals = F.mul(F.horner(cs, xs), d)
    affine = int(q + F.chi(vals).sum())
    if deg % 2 == 1:
        return affine + 1
    return affine + 1 + int(F.chi(F.const(cs[-1] * d)))


def _quartic_terms(coeffs: Dict[Tuple[int, int, int], object], p: int) -> Dict[Tuple[int, int, int], int]:
    out = {}
    for mono, c in coeffs.items():
        v = _reduce_scalar(c, p)
        if v:
            out[tuple(mono)] = v
    return out


def _eval_quartic_rows(F: FqTables, terms, x, ys, z):
    """Q(x, y, z) for a fixed x, z and all y in ys."""
    acc = np.zeros_like(ys)
    for (i, j, l), c in terms.items():
        coef = F.mul(F.mul(_pow(F, x, i), _pow(F, z, l)), c)
        acc = F.add(acc, F.mul(_pow(F, ys, j), coef))
    return acc


def _pow(F: FqTables, x, e: int):
    out = np.ones_like(np.asarray(x, dtype=np.int64))
    for _ in range(e):
        out = F.mul(out, x)
    return out


def count_quartic_general(coeffs, q: int) -> int:
    """Projective points of a plane quartic by enumeration of P^2 (O(q^2))."""
    p, k = _prime_power(q)
    if q > MAX_QUARTIC_Q:
        raise ValueError("field too large for enumeration")
    F = fq_tables(p, k)
    terms = _quartic_terms(coeffs, p)
    ys = np.arange(q, dtype=np.int64)
    total = 0
    for x in range(q):
        total += int((_eval_quartic_rows(F, terms, x, ys, 1) == 0).sum())
    # z = 0: points [x : 1 : 0] and [1 : 0 : 0]
    xs = np.arange(q, dtype=np.int64)
    at_inf = np.zeros_like(xs)
    for (i, j, l), c in terms.items():
        if l == 0:
            at_inf = F.add(at_inf, F.mul(_pow(F, xs, i), c))
    total += int((at_inf == 0).sum())
    total += int(terms.get((4, 0, 0), 0) == 0)
    return total


def _is_even_quartic(terms) -> bool:
    return all(i % 2 == 0 and j % 2 == 0 and l % 2 == 0 for i, j, l in terms)


def count_quartic_even(coeffs, q: int) -> int:
    """Even quartics A X^4 + B Y^4 + C Z^4 + D X^2Y^2 + E X^2Z^2 + G Y^2Z^2: solve for Y^2 per X^2."""
    p, k = _prime_power(q)
    F = fq_tables(p, k)
    terms = _quartic_terms(coeffs, p)
    if not _is_even_quartic(terms):
        raise ValueError("quartic is not even")
    A, B, C = (terms.get(m, 0) for m in ((4, 0, 0), (0, 4, 0), (0, 0, 4)))
    D, E, G = (terms.get(m, 0) for m in ((2, 2, 0), (2, 0, 2), (0, 2, 2)))
    if B == 0:
        return count_quartic_general(coeffs, q)
    a = np.arange(q, dtype=np.int64)  # candidate values of x^2 (z = 1)
    wa = 1 + F.chi(a)
    lin = F.add(F.mul(a, D), G)
    const = F.add(F.add(F.mul(F.mul(a, a), A), F.mul(a, E)), C)
    disc = F.add(F.mul(lin, lin), F.neg(F.mul(const, F.const(4 * B))))
    root = F.sqrt(disc)
    inv2B = F.inv(F.const(2 * B))
    has = root >= 0
    rt = np.where(has, root, 0)
    b1 = F.mul(F.add(F.neg(lin), rt), inv2B)
    b2 = F.mul(F.add(F.neg(lin), F.neg(rt)), inv2B)
    wb = np.where(has, (1 + F.chi(b1)) + np.where(disc == 0, 0, 1 + F.chi(b2)), 0)
    affine = int((wa * wb).sum())
    # z = 0: A x^4 + D x^2 y^2 + B y^4 = 0 on [x : 1 : 0], plus [1 : 0 : 0] when A = 0
    xs = np.arange(q, dtype=np.int64)
    x2 = F.mul(xs, xs)
    at_inf = F.add(F.add(F.mul(F.mul(x2, x2), A), F.mul(x2, D)), np.full_like(xs, B))
    return affine + int((at_inf == 0).sum()) + int(A == 0)


def count_points(curve, q: int) -> int:
    """Number of F_q points on a hyperelliptic model (delta, f) or a plane quartic."""
    if hasattr(curve, "quartic_coeffs"):
        coeffs = curve.quartic_coeffs()
        p, _ = _prime_power(q)
        if _is_even_quartic(_quartic_terms(coeffs, p)):
            return count_quartic_even(coeffs, q)
        return count_quartic_general(coeffs, q)
    return count_hyperelliptic(curve.delta, curve.f, q)


def count_points_naive(delta, f: Poly, q: int) -> int:
    """Oracle: enumerate (x, y) pairs with the scalar finite-field types."""
    from .algebra.scalars import GF

    p, k = _prime_power(q)
    Fq = GF(p, k)
    one = Fq(1)
    cs = [one * _reduce_scalar(c, p) for c in f.c]
    d = one * _reduce_scalar(delta, p)
    elems = list(Fq.elements())
    squares: Dict = {}
    for y in elems:
        key = y * y
        squares[key] = squares.get(key, 0) + 1
    total = 0
    for x in elems:
        v = Poly(cs)(x)
        # delta y^2 = v  <=>  y^2 = v / delta
        total += squares.get(v / d, 0)
    while len(cs) > 1 and not cs[-1]:
        cs.pop()
    if (len(cs) - 1) % 2:
        return total + 1
    lc = cs[-1] / d
    return total + (2 if squares.get(lc, 0) else 0)


# -- Frobenius data -----------------------------------------------------------------


@dataclass(frozen=True)
class FrobeniusData:
    """Characteristic polynomial of Frobenius, coefficients from T^0 up to T^(2g)."""

    p: int
    coeffs: Tuple[int, ...]
    counts: Tuple[int, ...]

    @property
    def genus(self) -> int:
        return len(self.coeffs) // 2

    def poly(self) -> Poly:
        return Poly([Fraction(c) for c in self.coeffs])

    def functional_equation_holds(self) -> bool:
        g, p, c = self.genus, self.p, self.coeffs
        return c[-1] == 1 and all(c[i] == p ** (g - i) * c[2 * g - i] for i in range(g + 1))

    def to_json(self) -> dict:
        return {"p": self.p, "coeffs": list(self.coeffs), "counts": list(self.counts)}

    @classmethod
    def from_json(cls, rec: dict) -> "FrobeniusData":
        return cls(int(rec["p"]), tuple(int(c) for c in rec["coeffs"]), tuple(int(c) for c in rec["counts"]))


def weil_poly_from_counts(p: int, counts: Sequence[int]) -> Tuple[int, ...]:
    """Coefficients (T^0 first) of the degree-2g Weil polynomial from N_1..N_g (Newton identities)."""
    g = len(counts)
    S = [p ** (i + 1) + 1 - counts[i] for i in range(g)]
    e = [Fraction(1)]
    for n in range(1, g + 1):
        acc = sum((-1) ** (i - 1) * e[n - i] * S[i - 1] for i in range(1, n + 1))
        e.append(Fraction(acc, n))
    if any(x.denominator != 1 for x in e):
        raise ValueError("counts are inconsistent with a Weil polynomial")
    e = [int(x) for x in e]
    # a_{2g - i} = (-1)^i e_i for i <= g; a_i = p^(g - i) a_{2g - i}
    top = [(-1) ** i * e[i] for i in range(g + 1)]
    coeffs = [0] * (2 * g + 1)
    for i in range(g + 1):
        coeffs[2 * g - i] = top[i]
        coeffs[i] = p ** (g - i) * top[i]
    return tuple(coeffs)


def frobenius_charpoly(curve, p: int, genus: Optional[int] = None) -> FrobeniusData:
    if genus is None:
        genus = getattr(curve, "genus", None) or (2 if curve.f.degree() <= 6 else 3)
    counts = tuple(count_points(curve, p**k) for k in range(1, genus + 1))
    return FrobeniusData(p, weil_poly_from_counts(p, counts), counts)


def is_good_prime(curve, p: int) -> bool:
    try:
        count_points(curve, p)
        return True
    except BadReduction:
        return False


# -- simplicity and twists ------------------------------------------------------------


def absolutely_simple_sufficient(fd: FrobeniusData) -> str:
    """"proven_simple" if the Weil quartic is irreducible and no small power of pi has a smaller field."""
    if fd.genus != 2:
        raise ValueError("the simplicity test is for genus-2 data")
    P = fd.poly()
    if not is_irreducible(P):
        return "inconclusive"
    L = EtaleAlgebra(P, "pi")
    for d in SIMPLICITY_POWERS:
        cp = (L.gen**d).char_poly()
        sqf = cp.exact_div(cp.gcd(cp.derivative()))
        if sqf.degree() != 4:
            return "inconclusive"
    return "proven_simple"


def flip_sign(coeffs: Sequence[int]) -> Tuple[int, ...]:
    """Coefficients of P(-T) (P monic of even degree)."""
    return tuple(c if i % 2 == 0 else -c for i, c in enumerate(coeffs))


def charpoly_match_up_to_twist(fd1: FrobeniusData, fd2: FrobeniusData, m: int) -> bool:
    """Equality when m is a square mod p, otherwise P2(T) = P1(-T)."""
    if fd1.p != fd2.p:
        raise ValueError("Frobenius data at different primes")
    p = fd1.p
    if (2 * m) % p == 0:
        raise ValueError(f"prime {p} divides 2m")
    if m == 1 or legendre(m % p, p) == 1:
        return fd1.coeffs == fd2.coeffs
    return fd2.coeffs == flip_sign(fd1.coeffs)


def weil_bound_ok(N: int, q: int, g: int) -> bool:
    return abs(N - (q + 1)) <= 2 * g * math.isqrt(q) + 2 * g
