"""Étale algebras K[T]/(h) for separable h, and squareness in them."""

from __future__ import annotations

from fractions import Fraction
from functools import cached_property
from typing import List, Optional, Sequence, Tuple

from .factor import factor_over_base, rational_roots
from .poly import Poly
from .resultant import resultant
from .scalars import Fp, is_square_rational

MAX_ETALE_DEGREE = 6


class NotInvertible(ZeroDivisionError):
    """Raised for zero divisors; ``factor`` is the component where the element vanishes."""

    def __init__(self, msg: str, factor: Poly):
        super().__init__(msg)
        self.factor = factor


class UnsupportedComponent(ValueError):
    pass


class EtaleAlgebra:
    def __init__(self, modulus: Poly, name: str = "T", max_degree: int = MAX_ETALE_DEGREE):
        if modulus.degree() < 1:
            raise ValueError("modulus must have positive degree")
        if modulus.degree() > max_degree:
            raise ValueError(f"étale degree {modulus.degree()} exceeds {max_degree}")
        modulus = modulus.monic()
        if not modulus.is_squarefree():
            raise ValueError("modulus is not separable")
        self.modulus = modulus
        self.n = modulus.degree()
        self.name = name

    def __eq__(self, o):
        return self is o or (isinstance(o, EtaleAlgebra) and self.modulus == o.modulus)

    def __hash__(self):
        return hash(self.modulus)

    def __repr__(self):
        return f"EtaleAlgebra({self.modulus.pretty(self.name)})"

    def __call__(self, x) -> "EtaleElement":
        if isinstance(x, EtaleElement):
            if x.alg != self:
                raise TypeError("element of a different algebra")
            return x
        if isinstance(x, Poly):
            return EtaleElement(self, x % self.modulus)
        return EtaleElement(self, Poly([x]))

    @property
    def gen(self) -> "EtaleElement":
        one = self.modulus.lc()
        return EtaleElement(self, Poly([one * 0, one]) % self.modulus)

    @property
    def one(self) -> "EtaleElement":
        return self(1)

    @cached_property
    def factors(self) -> List[Poly]:
        """Monic irreducible factors of the modulus over the base field."""
        facs = factor_over_base(self.modulus)
        assert all(e == 1 for _, e in facs)
        prod = Poly([1])
        for g, _ in facs:
            prod = prod * g
        assert prod == self.modulus, "factorization does not multiply back"
        return [g for g, _ in facs]

    @cached_property
    def idempotents(self) -> List[Poly]:
        """e_j with e_j = 1 mod factor j and 0 mod the other factors."""
        out = []
        for g in self.factors:
            cof = self.modulus.exact_div(g)
            _, s, _ = (cof % g).xgcd(g)
            out.append((cof * s) % self.modulus)
        return out

    @property
    def is_field(self) -> bool:
        return len(self.factors) == 1


class EtaleElement:
    __slots__ = ("alg", "rep")

    def __init__(self, alg: EtaleAlgebra, rep: Poly):
        self.alg = alg
        self.rep = rep

    def _co(self, o):
        if isinstance(o, EtaleElement):
            if o.alg is not self.alg and o.alg != self.alg:
                raise TypeError("elements of different étale algebras")
            return o.rep
        if isinstance(o, (int, Fraction, Fp)):
            return Poly([o])
        return None

    def __add__(self, o):
        r = self._co(o)
        return NotImplemented if r is None else EtaleElement(self.alg, self.rep + r)

    __radd__ = __add__

    def __neg__(self):
        return EtaleElement(self.alg, -self.rep)

    def __sub__(self, o):
        r = self._co(o)
        return NotImplemented if r is None else EtaleElement(self.alg, self.rep - r)

    def __rsub__(self, o):
        r = self._co(o)
        return NotImplemented if r is None else EtaleElement(self.alg, r - self.rep)

    def __mul__(self, o):
        r = self._co(o)
        if r is None:
            return NotImplemented
        return EtaleElement(self.alg, (self.rep * r) % self.alg.modulus)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        return EtaleElement(self.alg, self.rep.powmod(e, self.alg.modulus))

    def inverse(self) -> "EtaleElement":
        g, s, _ = self.rep.xgcd(self.alg.modulus)
        if g.degree() != 0:
            raise NotInvertible(f"zero divisor: vanishes on the component {g.pretty(self.alg.name)}", g)
        return EtaleElement(self.alg, s % self.alg.modulus)

    def __truediv__(self, o):
        if isinstance(o, EtaleElement):
            return self * o.inverse()
        if isinstance(o, (int, Fraction)):
            return EtaleElement(self.alg, self.rep / Fraction(o))
        if isinstance(o, Fp):
            return EtaleElement(self.alg, self.rep / o)
        return NotImplemented

    def __rtruediv__(self, o):
        r = self._co(o)
        if r is None:
            return NotImplemented
        return EtaleElement(self.alg, r) * self.inverse()

    def __eq__(self, o):
        r = self._co(o)
        if r is None:
            return NotImplemented
        return (self.rep - r) % self.alg.modulus == Poly.zero()

    def __hash__(self):
        return hash((self.alg, self.rep))

    def __bool__(self):
        return bool(self.rep)

    def __repr__(self):
        return f"[{self.rep.pretty(self.alg.name)}]"

    # -- structure -----------------------------------------------------------

    def is_base(self) -> bool:
        return self.rep.degree() <= 0

    def base_value(self):
        """The element as a base scalar; raises if it does not lie in the base."""
        if not self.is_base():
            raise ValueError(f"{self!r} does not lie in the base field")
        return self.rep[0]

    def mult_matrix(self) -> List[List]:
        n = self.alg.n
        cols = []
        basis = Poly([self.alg.modulus.lc()])
        for _ in range(n):
            v = (self.rep * basis) % self.alg.modulus
            cols.append([v[i] for i in range(n)])
            basis = basis * Poly([0, 1])
        return [[cols[j][i] for j in range(n)] for i in range(n)]

    def char_poly(self) -> Poly:
        """Characteristic polynomial of multiplication by self (degree n)."""
        return charpoly_hessenberg(self.mult_matrix())

    def norm(self):
        return resultant(self.alg.modulus, self.rep) if self.rep else self.rep[0] * 0

    def trace(self):
        m = self.mult_matrix()
        return sum((m[i][i] for i in range(len(m))), m[0][0] * 0)

    def component(self, j: int) -> "EtaleElement":
        g = self.alg.factors[j]
        return EtaleElement(EtaleAlgebra(g, self.alg.name), self.rep % g)


def charpoly_hessenberg(m: List[List]) -> Poly:
    """Characteristic polynomial det(x I - m) over a field via Hessenberg form."""
    n = len(m)
    h = [row[:] for row in m]
    for k in range(1, n - 1):
        piv = next((i for i in range(k, n) if h[i][k - 1] != 0), None)
        if piv is None:
            continue
        if piv != k:
            h[piv], h[k] = h[k], h[piv]
            for row in h:
                row[piv], row[k] = row[k], row[piv]
        inv = 1 / h[k][k - 1]
        for i in range(k + 1, n):
            u = h[i][k - 1] * inv
            if u != 0:
                for j in range(n):
                    h[i][j] = h[i][j] - u * h[k][j]
                for row in h:
                    row[k] = row[k] + u * row[i]
    one = h[0][0] * 0 + 1
    polys = [Poly([one])]
    for mm in range(1, n + 1):
        p = Poly([-h[mm - 1][mm - 1], one]) * polys[mm - 1]
        prod = one
        for i in range(mm - 1, 0, -1):
            prod = prod * h[i][i - 1]
            p = p - polys[i - 1] * (h[i - 1][mm - 1] * prod)
        polys.append(p)
    return polys[n]


def bareiss_det(m: List[List[Poly]]) -> Poly:
    """Fraction-free determinant of a matrix with polynomial entries."""
    a = [row[:] for row in m]
    n = len(a)
    sign, prev = 1, Poly([1])
    for k in range(n - 1):
        piv = next((i for i in range(k, n) if a[i][k]), None)
        if piv is None:
            return Poly.zero()
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]).exact_div(prev)
        prev = a[k][k]
    return a[n - 1][n - 1] * sign


def norm_poly(g: Poly, alg: EtaleAlgebra) -> Poly:
    """Norm from L[x] down to K[x] of a polynomial with coefficients in L = alg."""
    n = alg.n
    coeffs = [alg(c) for c in g.c]
    # column j of the matrix of multiplication by g on the L-basis T^j of L[x]
    cols = []
    for j in range(n):
        shift = alg(Poly([0] * j + [1]))
        cols.append([(c * shift).rep for c in coeffs])
    mat = []
    for i in range(n):
        row = []
        for j in range(n):
            row.append(Poly([cp[i] for cp in cols[j]]))
        mat.append(row)
    return bareiss_det(mat)


# -- squareness --------------------------------------------------------------


def _sqrt_quadratic_component(alpha: Poly, h: Poly) -> Optional[Poly]:
    """Square root of alpha in Q[T]/(h), deg h = 2, as a polynomial in T; None if none."""
    p, q = h[1], h[0]
    d = p * p / 4 - q
    a0, a1 = alpha[0], alpha[1]
    a, b = a0 - a1 * p / 2, a1

    def in_T(x, y):  # x + y*theta with theta = T + p/2
        return Poly([x + y * p / 2, y])

    if b == 0:
        ok, r = is_square_rational(a)
        if ok:
            return in_T(r, 0)
        ok, r = is_square_rational(a / d)
        if ok:
            return in_T(0, r)
        return None
    ok, nrm = is_square_rational(a * a - d * b * b)
    if not ok:
        return None
    for x2 in ((a + nrm) / 2, (a - nrm) / 2):
        ok, x = is_square_rational(x2)
        if ok and x != 0:
            cand = in_T(x, b / (2 * x))
            if (cand * cand - alpha) % h == Poly.zero():
                return cand
    return None


def _sqrt_cubic_component(alpha: Poly, h: Poly) -> Optional[Poly]:
    """Square root of alpha in the cubic field Q[T]/(h) via char-poly matching."""
    if alpha.degree() <= 0:
        ok, r = is_square_rational(alpha[0])
        return Poly([r]) if ok else None
    alg = EtaleAlgebra(h)
    a = alg(alpha)
    cp = a.char_poly()  # x^3 - p1 x^2 + p2 x - p3
    p1, p2, p3 = -cp[2], cp[1], -cp[0]
    ok, r3 = is_square_rational(p3)
    if not ok:
        return None
    for e3 in {r3, -r3}:
        # (e1^2 - p1)^2 - 8 e3 e1 - 4 p2 = 0
        quartic = Poly([p1 * p1 - 4 * p2, -8 * e3, -2 * p1, 0, 1])
        for e1 in rational_roots(quartic):
            e2 = (e1 * e1 - p1) / 2
            den = a + e2
            if not den:
                continue
            sigma = (a * e1 + e3) / den
            if sigma * sigma == a:
                return sigma.rep
    return None


def sqrt_in_etale(alpha: EtaleElement) -> Optional[EtaleElement]:
    """A square root of alpha in the étale algebra over Q, or None.

    Components of degree 1, 2 and 3 are supported; the component roots are
    glued with the CRT idempotents and the result is checked exactly.
    """
    alg = alpha.alg
    if not isinstance(alg.modulus.lc(), Fraction):
        raise UnsupportedComponent("squareness test is implemented over Q only")
    parts = []
    for g in alg.factors:
        comp = alpha.rep % g
        if not comp:
            parts.append(Poly.zero())
            continue
        if g.degree() == 1:
            ok, r = is_square_rational(comp[0])
            root = Poly([r]) if ok else None
        elif g.degree() == 2:
            root = _sqrt_quadratic_component(comp, g)
        elif g.degree() == 3:
            root = _sqrt_cubic_component(comp, g)
        else:
            raise UnsupportedComponent(f"component of degree {g.degree()} is not supported")
        if root is None:
            return None
        parts.append(root)
    sigma = Poly.zero()
    for e, r in zip(alg.idempotents, parts):
        sigma = sigma + e * r
    sigma = EtaleElement(alg, sigma % alg.modulus)
    assert sigma * sigma == alpha, "square root failed verification"
    return sigma


def is_square_in_etale(alpha: EtaleElement) -> Tuple[bool, Optional[EtaleElement]]:
    root = sqrt_in_etale(alpha)
    return root is not None, root


def is_square_mod_p(alpha_rep: Poly, h: Poly, p: int) -> bool:
    """Squareness of the image of alpha in F_p[T]/(h mod p) (finite-field oracle)."""
    hp = Poly([Fp(c, p) for c in h.c]).monic()
    ap = Poly([Fp(c, p) for c in alpha_rep.c])
    for g, e in factor_over_base(hp):
        if e != 1:
            raise ValueError(f"h is not separable mod {p}")
        comp = ap % g
        if not comp:
            continue
        q = p ** g.degree()
        if comp.powmod((q - 1) // 2, g) != Poly([Fp(1, p)]):
            return False
    return True
