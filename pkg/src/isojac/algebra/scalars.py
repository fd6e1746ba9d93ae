"""Base scalars: rationals, prime fields F_p and prime-power fields F_{p^k}.

Rationals are plain :class:`fractions.Fraction` values.  Prime-field and
prime-power-field elements are small immutable wrappers that interoperate
with ``int`` and ``Fraction`` operands (a Fraction is reduced mod p).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import isqrt
from typing import Iterator, Optional, Tuple, Union


class RingMismatch(TypeError):
    """Operands come from different coefficient rings."""


def to_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return parse_rational(x)
    raise TypeError(f"cannot interpret {x!r} as a rational")


def parse_rational(s: str) -> Fraction:
    """Parse ``"p/q"`` or ``"n"``; floats are rejected."""
    s = s.strip()
    if any(ch in s for ch in ".eE") and not s.lstrip("+-").isdigit():
        raise ValueError(f"not an exact rational: {s!r}")
    return Fraction(s)


def fmt_rational(q) -> str:
    q = to_fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def is_square_rational(q) -> Tuple[bool, Optional[Fraction]]:
    """Return ``(True, root)`` if q is the square of a rational, else ``(False, None)``.

    The root returned is the non-negative one.
    """
    q = to_fraction(q)
    if q < 0:
        return False, None
    a, b = q.numerator, q.denominator
    ra, rb = isqrt(a), isqrt(b)
    if ra * ra == a and rb * rb == b:
        return True, Fraction(ra, rb)
    return False, None


def squarefree_part(q) -> int:
    """Signed squarefree integer m with q = m * (rational square)."""
    q = to_fraction(q)
    if q == 0:
        raise ValueError("zero has no squarefree part")
    from sympy import factorint

    n = abs(q.numerator * q.denominator)
    m = 1
    for prime, e in factorint(n).items():
        if e % 2:
            m *= prime
    return m if q > 0 else -m


def legendre(a: int, p: int) -> int:
    a %= p
    if a == 0:
        return 0
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


class Fp:
    """Element of the prime field F_p (p an odd prime)."""

    __slots__ = ("v", "p")

    def __init__(self, v, p: int):
        if isinstance(v, Fp):
            if v.p != p:
                raise RingMismatch(f"F_{v.p} element used as F_{p}")
            v = v.v
        elif isinstance(v, Fraction):
            if v.denominator % p == 0:
                raise ZeroDivisionError(f"{v} has no image in F_{p}")
            v = v.numerator * pow(v.denominator, -1, p)
        self.v = v % p
        self.p = p

    def _co(self, o):
        if isinstance(o, Fp):
            if o.p != self.p:
                raise RingMismatch(f"F_{self.p} vs F_{o.p}")
            return o.v
        if isinstance(o, int):
            return o
        if isinstance(o, Fraction):
            return Fp(o, self.p).v
        return None

    def __add__(self, o):
        w = self._co(o)
        return NotImplemented if w is None else Fp(self.v + w, self.p)

    __radd__ = __add__

    def __sub__(self, o):
        w = self._co(o)
        return NotImplemented if w is None else Fp(self.v - w, self.p)

    def __rsub__(self, o):
        w = self._co(o)
        return NotImplemented if w is None else Fp(w - self.v, self.p)

    def __mul__(self, o):
        w = self._co(o)
        return NotImplemented if w is None else Fp(self.v * w, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return Fp(-self.v, self.p)

    def inverse(self) -> "Fp":
        if self.v == 0:
            raise ZeroDivisionError(f"division by zero in F_{self.p}")
        return Fp(pow(self.v, -1, self.p), self.p)

    def __truediv__(self, o):
        w = self._co(o)
        if w is None:
            return NotImplemented
        return self * Fp(w, self.p).inverse()

    def __rtruediv__(self, o):
        w = self._co(o)
        if w is None:
            return NotImplemented
        return Fp(w, self.p) * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        return Fp(pow(self.v, e, self.p), self.p)

    def __eq__(self, o):
        w = self._co(o)
        if w is None:
            return NotImplemented
        return (self.v - w) % self.p == 0

    def __hash__(self):
        return hash((self.v, self.p))

    def __bool__(self):
        return self.v != 0

    def __int__(self):
        return self.v

    def __repr__(self):
        return f"{self.v} (mod {self.p})"

    def is_square(self) -> bool:
        return self.v == 0 or legendre(self.v, self.p) == 1

    def lift(self) -> int:
        """Symmetric lift to (-p/2, p/2]."""
        return self.v - self.p if self.v > self.p // 2 else self.v


def _polymulmod(a: Tuple[int, ...], b: Tuple[int, ...], mod: Tuple[int, ...], p: int) -> Tuple[int, ...]:
    k = len(mod) - 1
    prod = [0] * (2 * k - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                prod[i + j] += x * y
    for d in range(len(prod) - 1, k - 1, -1):
        c = prod[d] % p
        if c:
            for j in range(k):
                prod[d - k + j] -= c * mod[j]
        prod[d] = 0
    return tuple(x % p for x in prod[:k])


class FiniteField:
    """F_{p^k} presented as F_p[X]/(m) with m the smallest monic irreducible.

    "Smallest" orders candidate moduli by the integer sum(c_i p^i) of their
    non-leading coefficients, which makes every serialized element reproducible.
    """

    def __init__(self, p: int, k: int = 1):
        if p == 2:
            raise ValueError("characteristic 2 is not supported")
        self.p, self.k, self.q = p, k, p**k
        self.modulus = smallest_irreducible(p, k)

    def __repr__(self):
        return f"GF({self.p}^{self.k})"

    def __eq__(self, o):
        return isinstance(o, FiniteField) and (o.p, o.k) == (self.p, self.k)

    def __hash__(self):
        return hash((self.p, self.k))

    def __call__(self, x):
        if self.k == 1:
            return Fp(x, self.p)
        if isinstance(x, FqElem):
            if x.F != self:
                raise RingMismatch(f"{x.F} element used in {self}")
            return x
        if isinstance(x, (tuple, list)):
            c = tuple(int(v) % self.p for v in x) + (0,) * (self.k - len(x))
            return FqElem(self, c[: self.k])
        v = Fp(x, self.p).v
        return FqElem(self, (v,) + (0,) * (self.k - 1))

    def gen(self):
        """The class of X."""
        if self.k == 1:
            raise ValueError("prime field has no polynomial generator")
        return self((0, 1))

    def from_int(self, n: int):
        """Element whose base-p digits are its coefficients."""
        digits = []
        for _ in range(self.k):
            n, r = divmod(n, self.p)
            digits.append(r)
        return self(tuple(digits)) if self.k > 1 else Fp(digits[0], self.p)

    def elements(self) -> Iterator:
        for n in range(self.q):
            yield self.from_int(n)

    @property
    def descriptor(self) -> dict:
        return {"kind": "GF", "p": self.p, "k": self.k, "modulus": list(self.modulus)}


@lru_cache(maxsize=None)
def GF(p: int, k: int = 1) -> FiniteField:
    return FiniteField(p, k)


class FqElem:
    """Element of F_{p^k} = F_p[X]/(m), stored as a coefficient tuple."""

    __slots__ = ("F", "c")

    def __init__(self, F: FiniteField, c: Tuple[int, ...]):
        self.F = F
        self.c = c

    def _co(self, o):
        if isinstance(o, FqElem):
            if o.F != self.F:
                raise RingMismatch(f"{self.F} vs {o.F}")
            return o
        if isinstance(o, (int, Fraction, Fp)):
            return self.F(o)
        return None

    def __add__(self, o):
        w = self._co(o)
        if w is None:
            return NotImplemented
        p = self.F.p
        return FqElem(self.F, tuple((a + b) % p for a, b in zip(self.c, w.c)))

    __radd__ = __add__

    def __neg__(self):
        p = self.F.p
        return FqElem(self.F, tuple(-a % p for a in self.c))

    def __sub__(self, o):
        w = self._co(o)
        return NotImplemented if w is None else self + (-w)

    def __rsub__(self, o):
        w = self._co(o)
        return NotImplemented if w is None else w + (-self)

    def __mul__(self, o):
        w = self._co(o)
        if w is None:
            return NotImplemented
        return FqElem(self.F, _polymulmod(self.c, w.c, self.F.modulus, self.F.p))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result = self.F(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def inverse(self):
        if not self:
            raise ZeroDivisionError(f"division by zero in {self.F}")
        return self ** (self.F.q - 2)

    def __truediv__(self, o):
        w = self._co(o)
        return NotImplemented if w is None else self * w.inverse()

    def __rtruediv__(self, o):
        w = self._co(o)
        return NotImplemented if w is None else w * self.inverse()

    def __eq__(self, o):
        w = self._co(o)
        if w is None:
            return NotImplemented
        return self.c == w.c

    def __hash__(self):
        return hash((self.F, self.c))

    def __bool__(self):
        return any(self.c)

    def __repr__(self):
        terms = [f"{a}*X^{i}" if i else str(a) for i, a in enumerate(self.c) if a]
        return "(" + (" + ".join(terms) or "0") + f") in {self.F}"

    def is_square(self) -> bool:
        return not self or self ** ((self.F.q - 1) // 2) == 1

    def to_int(self) -> int:
        return sum(a * self.F.p**i for i, a in enumerate(self.c))


Scalar = Union[Fraction, int, Fp, FqElem]


def sqrt_fq(a):
    """A square root of a in F_q (Fp or FqElem), or None if a is a non-square.

    Tonelli-Shanks over the multiplicative group of order q - 1.
    """
    if not a:
        return a
    if isinstance(a, Fp):
        q, one = a.p, Fp(1, a.p)
        field_elems = (Fp(n, a.p) for n in range(2, a.p))
    else:
        q, one = a.F.q, a.F(1)
        field_elems = (a.F.from_int(n) for n in range(2, a.F.q))
    if a ** ((q - 1) // 2) != 1:
        return None
    s, m = 0, q - 1
    while m % 2 == 0:
        s, m = s + 1, m // 2
    z = next(e for e in field_elems if e ** ((q - 1) // 2) != 1)
    c = z**m
    x = a ** ((m + 1) // 2)
    t = a**m
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2
            i += 1
        b = c ** (2 ** (s - i - 1))
        x, c = x * b, b * b
        t, s = t * c, i
    assert x * x == a
    return x * one


@lru_cache(maxsize=None)
def smallest_irreducible(p: int, k: int) -> Tuple[int, ...]:
    """Monic irreducible of degree k over F_p, low-to-high coefficients."""
    if k == 1:
        return (0, 1)
    for n in range(p**k):
        c = []
        for _ in range(k):
            n, r = divmod(n, p)
            c.append(r)
        cand = tuple(c) + (1,)
        if cand[0] and _is_irreducible_fp(cand, p):
            return cand
    raise AssertionError("no irreducible polynomial found")


def _is_irreducible_fp(f: Tuple[int, ...], p: int) -> bool:
    """Rabin's test for a monic f over F_p."""
    from .poly import Poly

    F = Poly([Fp(c, p) for c in f])
    n = F.degree()
    x = Poly([Fp(0, p), Fp(1, p)])
    from sympy import primefactors

    def frob_power(j):
        return x.powmod(p**j, F)

    if (frob_power(n) - x) % F != Poly.zero():
        return False
    for r in primefactors(n):
        g = (frob_power(n // r) - x).gcd(F)
        if g.degree() > 0:
            return False
    return True
