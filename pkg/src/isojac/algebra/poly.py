"""Dense univariate polynomials over any exact coefficient ring.

Coefficients are stored low-to-high.  Integer inputs are promoted to
``Fraction`` unless another coefficient fixes the ring (F_p, F_q, an étale
algebra, or polynomials themselves), in which case plain numbers are coerced
into that ring.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable, List, Sequence, Tuple


def _is_rational(c) -> bool:
    return isinstance(c, (int, Fraction))


def _normalize(coeffs: Iterable) -> Tuple:
    cs = list(coeffs)
    template = next((c for c in cs if not _is_rational(c)), None)
    if template is None:
        cs = [c if isinstance(c, Fraction) else Fraction(c) for c in cs]
    else:
        zero = template * 0
        cs = [zero + c if _is_rational(c) else c for c in cs]
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


class Poly:
    __slots__ = ("c",)

    def __init__(self, coeffs: Iterable = ()):
        self.c = _normalize(coeffs)

    @classmethod
    def _raw(cls, coeffs: Tuple) -> "Poly":
        p = object.__new__(cls)
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        p.c = tuple(cs)
        return p

    @classmethod
    def zero(cls) -> "Poly":
        return cls._raw(())

    @classmethod
    def const(cls, a) -> "Poly":
        return cls([a])

    @classmethod
    def x(cls, one=1) -> "Poly":
        return cls([one * 0, one])

    @classmethod
    def from_roots(cls, roots: Sequence, lead=1) -> "Poly":
        p = cls([lead])
        for r in roots:
            p = p * cls([-r, r * 0 + 1])
        return p

    # -- basic accessors -------------------------------------------------

    def degree(self) -> int:
        return len(self.c) - 1

    def lc(self):
        if not self.c:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.c[-1]

    def __getitem__(self, i: int):
        return self.c[i] if 0 <= i < len(self.c) else 0

    def coeffs(self) -> List:
        return list(self.c)

    def is_zero(self) -> bool:
        return not self.c

    def __bool__(self):
        return bool(self.c)

    def _one(self):
        return self.c[0] * 0 + 1 if self.c else Fraction(1)

    # -- ring operations -------------------------------------------------

    def _wrap(self, o):
        if isinstance(o, Poly):
            return o
        return Poly([o])

    def __add__(self, o):
        o = self._wrap(o)
        a, b = self.c, o.c
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, y in enumerate(b):
            out[i] = out[i] + y
        return Poly._raw(tuple(out))

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw(tuple(-a for a in self.c))

    def __sub__(self, o):
        return self + (-self._wrap(o))

    def __rsub__(self, o):
        return self._wrap(o) - self

    def __mul__(self, o):
        if not isinstance(o, Poly):
            return Poly._raw(tuple(a * o for a in self.c))
        a, b = self.c, o.c
        if not a or not b:
            return Poly.zero()
        out = [a[0] * 0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x == 0:
                continue
            for j, y in enumerate(b):
                out[i + j] = out[i + j] + x * y
        return Poly._raw(tuple(out))

    def __rmul__(self, o):
        return Poly._raw(tuple(o * a for a in self.c))

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative polynomial power")
        result = Poly([self._one()])
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, o):
        if o is None:
            return False
        if not isinstance(o, Poly):
            o = Poly([o])
        if len(self.c) != len(o.c):
            return False
        return all(x == y for x, y in zip(self.c, o.c))

    def __hash__(self):
        return hash(tuple(self.c))

    def __truediv__(self, a):
        """Divide every coefficient by the scalar a."""
        if isinstance(a, Poly):
            return self.exact_div(a)
        if _is_rational(a):
            a = Fraction(a)
        inv = 1 / a
        return Poly._raw(tuple(c * inv for c in self.c))

    def divmod(self, g: "Poly") -> Tuple["Poly", "Poly"]:
        if not g.c:
            raise ZeroDivisionError("division by the zero polynomial")
        lead = g.c[-1]
        inv = 1 / (Fraction(lead) if _is_rational(lead) else lead)
        r = list(self.c)
        dg = len(g.c) - 1
        if len(r) - 1 < dg:
            return Poly.zero(), self
        q = [None] * (len(r) - dg)
        for k in range(len(r) - 1, dg - 1, -1):
            coef = r[k] * inv
            q[k - dg] = coef
            if coef != 0:
                for j in range(dg + 1):
                    r[k - dg + j] = r[k - dg + j] - coef * g.c[j]
        return Poly._raw(tuple(q)), Poly._raw(tuple(r[:dg]))

    def __floordiv__(self, g):
        return self.divmod(self._wrap(g))[0]

    def __mod__(self, g):
        return self.divmod(self._wrap(g))[1]

    def exact_div(self, g: "Poly") -> "Poly":
        q, r = self.divmod(g)
        if r:
            raise ArithmeticError("inexact polynomial division")
        return q

    def monic(self) -> "Poly":
        if not self.c:
            return self
        return self / self.c[-1]

    def gcd(self, o: "Poly") -> "Poly":
        a, b = self, o
        while b:
            a, b = b, a % b
        return a.monic()

    def xgcd(self, o: "Poly"):
        """Return (g, s, t) with s*self + t*o = g and g monic."""
        r0, r1 = self, o
        one = Poly([self._one()])
        s0, s1, t0, t1 = one, Poly.zero(), Poly.zero(), one
        while r1:
            q, r = r0.divmod(r1)
            r0, r1 = r1, r
            s0, s1 = s1, s0 - q * s1
            t0, t1 = t1, t0 - q * t1
        if not r0:
            return r0, s0, t0
        inv = 1 / r0.lc() if not _is_rational(r0.lc()) else 1 / Fraction(r0.lc())
        return r0 * inv, s0 * inv, t0 * inv

    def powmod(self, e: int, m: "Poly") -> "Poly":
        result = Poly([self._one()]) % m
        base = self % m
        while e:
            if e & 1:
                result = (result * base) % m
            base = (base * base) % m
            e >>= 1
        return result

    # -- calculus and substitution ----------------------------------------

    def derivative(self) -> "Poly":
        return Poly._raw(tuple(a * i for i, a in enumerate(self.c) if i))

    def __call__(self, x):
        if not self.c:
            return x * 0
        acc = self.c[-1] + x * 0
        for a in reversed(self.c[:-1]):
            acc = acc * x + a
        return acc

    def compose(self, g: "Poly") -> "Poly":
        if not self.c:
            return self
        acc = Poly([self.c[-1]])
        for a in reversed(self.c[:-1]):
            acc = acc * g + a
        return acc

    def scale_var(self, lam) -> "Poly":
        """f(lam * x)."""
        out, pw = [], None
        for i, a in enumerate(self.c):
            pw = lam * 0 + 1 if i == 0 else pw * lam
            out.append(a * pw)
        return Poly._raw(tuple(out))

    def neg_var(self) -> "Poly":
        """f(-x)."""
        return Poly._raw(tuple(-a if i % 2 else a for i, a in enumerate(self.c)))

    def reverse(self, n: int | None = None) -> "Poly":
        """x^n f(1/x) with n defaulting to deg f."""
        n = self.degree() if n is None else n
        cs = list(self.c) + [self.c[0] * 0 if self.c else 0] * (n + 1 - len(self.c))
        return Poly._raw(tuple(reversed(cs[: n + 1])))

    def map(self, fn: Callable) -> "Poly":
        return Poly([fn(a) for a in self.c])

    def is_squarefree(self) -> bool:
        return self.gcd(self.derivative()).degree() == 0

    # -- display -----------------------------------------------------------

    def __repr__(self):
        return f"Poly({self.pretty()})"

    def pretty(self, var: str = "x") -> str:
        if not self.c:
            return "0"
        parts = []
        for i in range(len(self.c) - 1, -1, -1):
            a = self.c[i]
            if a == 0:
                continue
            mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
            s = str(a) if _is_rational(a) else f"({a!r})"
            if mono:
                if s == "1":
                    s = mono
                elif s == "-1":
                    s = "-" + mono
                else:
                    s = f"{s}*{mono}"
            parts.append(s)
        return " + ".join(parts).replace("+ -", "- ")


def lagrange_interpolate(xs: Sequence[Fraction], ys: Sequence[Fraction]) -> Poly:
    """Newton divided differences over Q."""
    xs = [Fraction(v) for v in xs]
    coef = [Fraction(v) for v in ys]
    n = len(xs)
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    p = Poly([coef[-1]])
    for i in range(n - 2, -1, -1):
        p = p * Poly([-xs[i], 1]) + coef[i]
    return p
