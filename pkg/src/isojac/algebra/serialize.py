"""JSON encodings for scalars, polynomials and coefficient rings."""

from __future__ import annotations

from fractions import Fraction
from typing import Any, List

from .poly import Poly
from .scalars import GF, Fp, FqElem, fmt_rational, parse_rational


def ring_of(x) -> dict:
    if isinstance(x, (int, Fraction)):
        return {"kind": "Q"}
    if isinstance(x, Fp):
        return {"kind": "GF", "p": x.p, "k": 1}
    if isinstance(x, FqElem):
        return x.F.descriptor
    raise TypeError(f"no ring descriptor for {type(x).__name__}")


def scalar_to_json(x) -> Any:
    if isinstance(x, (int, Fraction)):
        return fmt_rational(x)
    if isinstance(x, Fp):
        return str(x.v)
    if isinstance(x, FqElem):
        return [int(c) for c in x.c]
    raise TypeError(f"cannot serialize {type(x).__name__}")


def scalar_from_json(v, ring: dict):
    kind = ring.get("kind", "Q")
    if kind == "Q":
        return parse_rational(str(v))
    F = GF(int(ring["p"]), int(ring.get("k", 1)))
    if F.k == 1:
        return Fp(int(v), F.p)
    return F(tuple(int(c) for c in v))


def poly_to_json(f: Poly) -> List:
    return [scalar_to_json(c) for c in f.c]


def poly_from_json(cs, ring: dict) -> Poly:
    return Poly([scalar_from_json(c, ring) for c in cs])
