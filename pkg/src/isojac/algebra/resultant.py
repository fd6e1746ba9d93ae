"""Resultants and discriminants.

Over a field the resultant is computed by the Euclidean remainder sequence.
Integer polynomials with large coefficients go through a multi-modular
route: the resultant is computed modulo enough word-size primes to exceed
twice the Hadamard bound and then recombined by CRT.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from functools import lru_cache
from typing import List, Sequence

from .poly import Poly


def resultant(f: Poly, g: Poly):
    """Res(f, g) over a field, equal to the Sylvester determinant."""
    if not f or not g:
        raise ValueError("resultant of a zero polynomial")
    m, n = f.degree(), g.degree()
    if m == 0:
        return f.lc() ** n if n else f.lc() * 0 + 1
    if n == 0:
        return g.lc() ** m
    sign = 1
    acc = f.lc() * 0 + 1
    a, b = f, g
    # Res(a, b) = (-1)^{deg a deg b} Res(b, a); Res(b, a) = lc(b)^{deg a - deg r} Res(b, r)
    while True:
        da, db = a.degree(), b.degree()
        if db == 0:
            return sign * acc * b.lc() ** da
        r = a % b
        if not r:
            return acc * 0
        if (da * db) % 2:
            sign = -sign
        acc = acc * b.lc() ** (da - r.degree())
        a, b = b, r


def discriminant(f: Poly):
    """(-1)^{d(d-1)/2} Res(f, f') / lc(f)."""
    d = f.degree()
    if d < 1:
        raise ValueError("discriminant of a constant")
    if d == 1:
        return f.lc() * 0 + 1
    r = resultant(f, f.derivative())
    sign = -1 if (d * (d - 1) // 2) % 2 else 1
    return sign * r / f.lc()


def sylvester_determinant(f: Poly, g: Poly) -> Fraction:
    """Res(f, g) as an explicit Sylvester determinant (rational Gaussian elimination)."""
    m, n = f.degree(), g.degree()
    size = m + n
    rows = []
    fc = [Fraction(c) for c in reversed(f.c)]
    gc = [Fraction(c) for c in reversed(g.c)]
    for i in range(n):
        rows.append([Fraction(0)] * i + fc + [Fraction(0)] * (size - m - 1 - i))
    for i in range(m):
        rows.append([Fraction(0)] * i + gc + [Fraction(0)] * (size - n - 1 - i))
    return _det(rows)


def _det(rows: List[List[Fraction]]) -> Fraction:
    a = [r[:] for r in rows]
    n = len(a)
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            det = -det
        det *= a[col][col]
        inv = 1 / a[col][col]
        for r in range(col + 1, n):
            if a[r][col] != 0:
                fac = a[r][col] * inv
                for c in range(col, n):
                    a[r][c] -= fac * a[col][c]
    return det


# -- multi-modular integer resultant ----------------------------------------


def resultant_mod_p(f: Sequence[int], g: Sequence[int], p: int) -> int:
    """Res(f, g) mod p for integer coefficient lists (low to high), p prime.

    Assumes the leading coefficients are nonzero mod p.
    """
    a = [c % p for c in f]
    b = [c % p for c in g]
    while a and a[-1] == 0:
        a.pop()
    while b and b[-1] == 0:
        b.pop()
    acc, sign = 1, 1
    while True:
        da, db = len(a) - 1, len(b) - 1
        if db == 0:
            return sign * acc * pow(b[0], da, p) % p
        # remainder of a by b
        r = a[:]
        inv = pow(b[-1], -1, p)
        for k in range(da, db - 1, -1):
            coef = r[k] * inv % p
            if coef:
                off = k - db
                for j in range(db + 1):
                    r[off + j] = (r[off + j] - coef * b[j]) % p
        r = r[:db]
        while r and r[-1] == 0:
            r.pop()
        if not r:
            return 0
        if (da * db) % 2:
            sign = -sign
        acc = acc * pow(b[-1], da - (len(r) - 1), p) % p
        a, b = b, r


def hadamard_bound(f: Sequence[int], g: Sequence[int]) -> int:
    """Upper bound for |Res(f, g)|: ||f||_2^{deg g} * ||g||_2^{deg f}."""
    m, n = len(f) - 1, len(g) - 1
    nf = math.isqrt(sum(c * c for c in f)) + 1
    ng = math.isqrt(sum(c * c for c in g)) + 1
    return nf**n * ng**m


@lru_cache(maxsize=None)
def _word_primes(count: int) -> tuple:
    from sympy import prevprime

    out, p = [], 1 << 62
    for _ in range(count):
        p = prevprime(p)
        out.append(p)
    return tuple(out)


def _threads() -> int:
    try:
        return max(1, int(os.environ.get("ISOJAC_THREADS", "1")))
    except ValueError:
        return 1


def resultant_zz(f: Sequence[int], g: Sequence[int]) -> int:
    """Exact Res(f, g) for integer polynomials via CRT over 62-bit primes.

    Primes dividing either leading coefficient are skipped.  The number of
    primes is fixed in advance from the Hadamard bound, so the result is
    deterministic; residues may be computed in a thread pool.
    """
    f, g = [int(c) for c in f], [int(c) for c in g]
    if not any(f) or not any(g):
        raise ValueError("resultant of a zero polynomial")
    bound = 2 * hadamard_bound(f, g) + 1
    primes: List[int] = []
    prod, idx = 1, 0
    pool = _word_primes(max(64, bound.bit_length() // 61 + 16))
    while prod <= bound:
        if idx >= len(pool):
            pool = _word_primes(2 * len(pool))
        p = pool[idx]
        idx += 1
        if f[-1] % p and g[-1] % p:
            primes.append(p)
            prod *= p
    workers = _threads()
    if workers > 1:
        with ThreadPoolExecutor(workers) as ex:
            residues = list(ex.map(lambda p: resultant_mod_p(f, g, p), primes))
    else:
        residues = [resultant_mod_p(f, g, p) for p in primes]
    return crt_symmetric(residues, primes)


def crt_symmetric(residues: Sequence[int], moduli: Sequence[int]) -> int:
    """CRT recombination into the symmetric range (-M/2, M/2]."""
    x, m = 0, 1
    for r, p in zip(residues, moduli):
        # x' = x + m * ((r - x) / m mod p)
        t = (r - x) * pow(m, -1, p) % p
        x += m * t
        m *= p
    return x - m if x > m // 2 else x
