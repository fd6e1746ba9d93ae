"""Certificates for pairs of curves: Igusa distinctness, Frobenius matches, simplicity, real points."""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence

from .algebra.scalars import fmt_rational, parse_rational, squarefree_part
from .ffverify import (
    BadReduction,
    FrobeniusData,
    absolutely_simple_sufficient,
    charpoly_match_up_to_twist,
    frobenius_charpoly,
)
from .igusa import WEIGHTS, IgusaVector, igusa_invariants, same_weighted_point
from .richelot import Genus2Curve


def threads() -> int:
    try:
        return max(1, int(os.environ.get("ISOJAC_THREADS", "1")))
    except ValueError:
        return 1


def _pmap(fn, items: Sequence) -> List:
    n = threads()
    if n == 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=n) as ex:
        return list(ex.map(fn, items))


def default_primes(bound: int = 100) -> List[int]:
    from sympy import primerange

    return [int(p) for p in primerange(3, bound)]


def real_points(c: Genus2Curve) -> dict:
    """Whether delta y^2 = f has real points, decided by Sturm root counting.

    If f has a real root there is a real Weierstrass point.  Otherwise f has the
    sign of its leading coefficient on all of R, and real points exist exactly
    when lc(f) / delta > 0.
    """
    import sympy

    x = sympy.Symbol("x")
    sp = sympy.Poly([sympy.Rational(Fraction(cf).numerator, Fraction(cf).denominator) for cf in reversed(c.f.c)], x)
    n_real = int(sp.count_roots())
    lc_sign = 1 if c.f.lc() > 0 else -1
    d_sign = 1 if c.delta > 0 else -1
    has = n_real > 0 or lc_sign * d_sign > 0
    return {"real_roots_of_f": n_real, "sign_lc": lc_sign, "sign_delta": d_sign, "has_real_points": has}


def _frob_pair(curves, m: int):
    def one(p: int) -> Optional[dict]:
        if (2 * m) % p == 0:
            return None
        try:
            fds = [frobenius_charpoly(c, p) for c in curves]
        except BadReduction:
            return None
        match = charpoly_match_up_to_twist(fds[0], fds[1], m) if m is not None else fds[0].coeffs == fds[1].coeffs
        return {"p": p, "first": fds[0].to_json(), "second": fds[1].to_json(), "match": match}

    return one


def genus2_certificate(
    c1: Genus2Curve,
    c2: Genus2Curve,
    m: int,
    primes: Iterable[int],
    pair_id: str = "",
    provenance: Optional[dict] = None,
    galois_condition: Optional[dict] = None,
    transformations: Optional[list] = None,
) -> dict:
    m = int(squarefree_part(m))
    I1, I2 = igusa_invariants(c1), igusa_invariants(c2)
    distinct = not same_weighted_point(I1, I2)
    frob = [r for r in _pmap(_frob_pair((c1, c2), m), list(primes)) if r is not None]
    simple = {"verdict": "inconclusive", "witness": None}
    for rec in frob:
        fd = FrobeniusData.from_json(rec["first"])
        if absolutely_simple_sufficient(fd) == "proven_simple":
            simple = {"verdict": "proven_simple", "witness": rec["first"]}
            break
    cert = {
        "pair": pair_id,
        "curves": [c1.to_json(), c2.to_json()],
        "provenance": provenance or {},
        "igusa": {"first": I1.to_json(), "second": I2.to_json(), "weights": list(WEIGHTS)},
        "igusa_distinct": distinct,
        "splitting_field_m": m,
        "frobenius": frob,
        "all_match": all(r["match"] for r in frob),
        "simplicity": simple,
        "real_points": [real_points(c1), real_points(c2)],
        "transformations": transformations or [],
        "evidence": "equal Frobenius data up to the stated twist is a necessary condition for isogeny",
    }
    if galois_condition is not None:
        cert["galois_condition"] = galois_condition
    return cert


def genus3_certificate(hyper, quartic, primes: Iterable[int], pair_id: str = "", provenance: Optional[dict] = None, elliptic=None) -> dict:
    frob = [r for r in _pmap(_g3_frob(hyper, quartic, elliptic), list(primes)) if r is not None]
    return {
        "pair": pair_id,
        "curves": [hyper.to_json(), quartic.to_json()],
        "provenance": provenance or {},
        "frobenius": frob,
        "all_match": all(r["match"] for r in frob),
        "evidence": "equal L-polynomials (necessary condition for isogeny)",
    }


def _g3_frob(hyper, quartic, elliptic):
    from .genus3 import _polymul, quartic_is_smooth_mod_p

    def one(p: int) -> Optional[dict]:
        try:
            if not quartic_is_smooth_mod_p(quartic, p):
                return None
            a = frobenius_charpoly(hyper, p, genus=3)
            b = frobenius_charpoly(quartic, p, genus=3)
        except BadReduction:
            return None
        rec = {"p": p, "first": a.to_json(), "second": b.to_json(), "match": a.coeffs == b.coeffs}
        if elliptic is not None:
            from .ffverify import count_hyperelliptic

            prod = (1,)
            try:
                for E in elliptic:
                    N = count_hyperelliptic(1, E.f, p)
                    prod = _polymul(prod, (p, -(p + 1 - N), 1))
            except BadReduction:
                return rec
            rec["elliptic_product"] = list(prod)
            rec["match"] = rec["match"] and tuple(prod) == a.coeffs
        return rec

    return one


def validate_certificate(cert: dict) -> Dict[str, bool]:
    """Recheck every verdict from the embedded data, without recounting points."""
    out = {}
    frob = cert.get("frobenius", [])
    m = cert.get("splitting_field_m")
    ok = True
    for rec in frob:
        a, b = FrobeniusData.from_json(rec["first"]), FrobeniusData.from_json(rec["second"])
        ok &= a.functional_equation_holds() and b.functional_equation_holds()
        from .ffverify import weil_poly_from_counts

        ok &= weil_poly_from_counts(a.p, a.counts) == a.coeffs and weil_poly_from_counts(b.p, b.counts) == b.coeffs
        expect = charpoly_match_up_to_twist(a, b, m) if m is not None else a.coeffs == b.coeffs
        if "elliptic_product" in rec:
            expect = expect and tuple(rec["elliptic_product"]) == a.coeffs
        ok &= expect == rec["match"]
    out["frobenius"] = ok
    out["all_match"] = cert.get("all_match") == all(r["match"] for r in frob)
    if "igusa" in cert:
        parse = lambda v: IgusaVector(tuple(parse_rational(x) for x in v))  # noqa: E731
        I1, I2 = parse(cert["igusa"]["first"]), parse(cert["igusa"]["second"])
        out["igusa_distinct"] = (not same_weighted_point(I1, I2)) == cert["igusa_distinct"]
    if cert.get("simplicity", {}).get("witness"):
        fd = FrobeniusData.from_json(cert["simplicity"]["witness"])
        out["simplicity"] = absolutely_simple_sufficient(fd) == cert["simplicity"]["verdict"]
    return out


def rational_str(x) -> str:
    return fmt_rational(x)
