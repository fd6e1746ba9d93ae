"""Rational functions in one variable over Q, kept as reduced fractions of Polys."""

from __future__ import annotations

from fractions import Fraction

from .poly import Poly


class RatFunc:
    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        num = num if isinstance(num, Poly) else Poly([num])
        den = Poly([1]) if den is None else (den if isinstance(den, Poly) else Poly([den]))
        if not den:
            raise ZeroDivisionError("zero denominator")
        g = num.gcd(den) if num else den.monic()
        if g.degree() > 0:
            num, den = num.exact_div(g), den.exact_div(g)
        lead = den.lc()
        self.num, self.den = num / lead, den / lead

    @classmethod
    def var(cls) -> "RatFunc":
        return cls(Poly([0, 1]))

    def _co(self, o):
        if isinstance(o, RatFunc):
            return o
        if isinstance(o, (int, Fraction, Poly)):
            return RatFunc(o)
        return None

    def __add__(self, o):
        o = self._co(o)
        if o is None:
            return NotImplemented
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den)

    def __sub__(self, o):
        o = self._co(o)
        return NotImplemented if o is None else self + (-o)

    def __rsub__(self, o):
        o = self._co(o)
        return NotImplemented if o is None else o + (-self)

    def __mul__(self, o):
        o = self._co(o)
        if o is None:
            return NotImplemented
        return RatFunc(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def inverse(self) -> "RatFunc":
        if not self.num:
            raise ZeroDivisionError("inverse of zero rational function")
        return RatFunc(self.den, self.num)

    def __truediv__(self, o):
        o = self._co(o)
        return NotImplemented if o is None else self * o.inverse()

    def __rtruediv__(self, o):
        o = self._co(o)
        return NotImplemented if o is None else o * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        return RatFunc(self.num**e, self.den**e)

    def __eq__(self, o):
        o = self._co(o)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __bool__(self):
        return bool(self.num)

    def __call__(self, x):
        """Evaluate at a scalar or substitute another rational function."""
        if isinstance(x, RatFunc):
            return _subst(self.num, x) / _subst(self.den, x)
        return self.num(x) / self.den(x)

    def is_poly(self) -> bool:
        return self.den.degree() == 0

    def __repr__(self):
        if self.is_poly():
            return f"RatFunc({self.num.pretty('s')})"
        return f"RatFunc(({self.num.pretty('s')}) / ({self.den.pretty('s')}))"


def _subst(p: Poly, x: RatFunc) -> RatFunc:
    acc = RatFunc(0)
    for a in reversed(p.c):
        acc = acc * x + a
    return acc


def is_square_poly(p: Poly) -> bool:
    """True when the rational polynomial p is the square of a rational polynomial."""
    from .factor import factor_rational_unbounded
    from .scalars import is_square_rational

    if not p:
        return True
    if not is_square_rational(p.lc())[0]:
        return False
    return all(e % 2 == 0 for _, e in factor_rational_unbounded(p))


def is_square_ratfunc(r: RatFunc) -> bool:
    return is_square_poly(r.num) and is_square_poly(r.den)
