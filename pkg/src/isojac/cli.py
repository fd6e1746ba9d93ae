"""Command-line interface: gen, verify, reproduce-examples, surface, r-certificate."""

from __future__ import annotations

import json
import sys
import threading
from fractions import Fraction
from typing import List, Optional

import click

from .algebra.poly import Poly
from .algebra.scalars import fmt_rational, parse_rational, squarefree_part
from .certificate import default_primes, genus2_certificate, genus3_certificate, validate_certificate
from .families import ParameterExcluded
from .richelot import Genus2Curve

EXIT_BAD_INPUT = 2
EXIT_EXCLUDED = 3
EXIT_INTERNAL = 4

_write_lock = threading.Lock()


class BadInput(click.ClickException):
    exit_code = EXIT_BAD_INPUT


def _jsonable(x):
    if isinstance(x, bool) or x is None or isinstance(x, (int, str, float)):
        return x
    if isinstance(x, Fraction):
        return fmt_rational(x)
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, Poly):
        return x.pretty("t")
    if hasattr(x, "to_json"):
        return _jsonable(x.to_json())
    return str(x)


def dumps(obj) -> str:
    """Canonical JSON: sorted keys, exact rationals as strings."""
    return json.dumps(_jsonable(obj), sort_keys=True, indent=2)


def emit(obj, out: Optional[str]) -> None:
    text = dumps(obj) + "\n"
    with _write_lock:
        if out:
            with open(out, "w", encoding="utf-8") as fh:
                fh.write(text)
        else:
            click.echo(text, nl=False)


def _rat(value: Optional[str], name: str) -> Fraction:
    if value is None:
        raise BadInput(f"missing --{name}")
    try:
        return parse_rational(value)
    except (ValueError, ZeroDivisionError) as exc:
        raise BadInput(f"--{name}: {exc}") from exc


def _prime_list(primes: Optional[str], max_prime: Optional[int], default_bound: int) -> List[int]:
    from sympy import isprime

    if primes:
        try:
            ps = sorted({int(p) for p in primes.split(",") if p.strip()})
        except ValueError as exc:
            raise BadInput(f"--primes: {exc}") from exc
        bad = [p for p in ps if p < 3 or not isprime(p)]
        if bad:
            raise BadInput(f"--primes: not odd primes: {bad}")
        return ps
    return default_primes(max_prime or default_bound)


def _run(fn):
    """Map domain errors to exit codes."""
    try:
        return fn()
    except click.ClickException:
        raise
    except ParameterExcluded as exc:
        click.echo(f"excluded parameter: {exc}", err=True)
        sys.exit(EXIT_EXCLUDED)
    except (ValueError, KeyError, TypeError, json.JSONDecodeError, OSError) as exc:
        click.echo(f"bad input: {exc}", err=True)
        sys.exit(EXIT_BAD_INPUT)
    except Exception as exc:  # noqa: BLE001
        click.echo(f"internal error: {type(exc).__name__}: {exc}", err=True)
        sys.exit(EXIT_INTERNAL)


@click.group()
@click.version_option(package_name="isojac")
def main():
    """Curves with isomorphic unpolarized Jacobians."""


# -- gen ------------------------------------------------------------------------------


def _published_for(family: str, params: dict):
    from . import examples as ex

    key = (family, tuple(sorted((k, fmt_rational(v)) for k, v in params.items())))
    table = {
        ("f1", (("t", "2"),)): ex.example_8_1,
        ("f2", (("v", "2"),)): ex.example_8_2,
        ("f2", (("v", "-4/3"),)): ex.example_8_3,
        ("crst", (("r", "-7/4"), ("s", "1/2"), ("t", "1/4"))): ex.example_8_4,
        ("crst", (("r", "-19/3"), ("s", "-6"), ("t", "-1/6"))): ex.example_8_5,
        ("g3", (("t", "1"),)): ex.example_8_6,
    }
    fn = table.get(key)
    return fn() if fn else None


_TRANSFORMS = {
    "8.1": [{"map": ["1", "0", "0", "2"], "scale": "1/64", "twist": "2", "applies_to": "both"}],
    "8.2": [
        {"map": ["0", "-2", "1", "1"], "scale": "4/245", "twist": "1", "applies_to": "f1"},
        {"map": ["0", "-1", "1", "0"], "scale": "2", "twist": "1", "applies_to": "f2"},
    ],
    "8.3": [
        {"map": ["2", "2", "1", "2"], "scale": "117649/25", "twist": "1/3", "applies_to": "f1"},
        {"complete_square": "x^3 + x^2 + x", "applies_to": "f1"},
        {"map": ["2", "2", "1", "2"], "scale": "2401/11", "twist": "1/3", "applies_to": "f2"},
    ],
    "8.4": [
        {"map": ["-1", "2", "4", "0"], "scale": "16/81", "twist": "1", "applies_to": "f1"},
        {"map": ["-1", "0", "4", "-8"], "scale": "4/81", "twist": "1", "applies_to": "f2"},
    ],
    "8.5": [
        {"map": ["1", "12", "-3/7", "0"], "scale": "1/73047507502104576", "twist": "133", "applies_to": "dual"},
        {"map": ["1", "-1/12", "0", "1/28"], "scale": "1/2718162496", "twist": "133", "applies_to": "dual_prime"},
    ],
}
_TRANSFORM_NOTE = "f'(x) = twist * scale * (c x + d)^6 * f((a x + b)/(c x + d)), map = (a, b, c, d)"


def _gen_genus2(family: str, params: dict):
    from .families import crst_curve, family1_pair, family2_construct, galois_condition, gensimple_pair

    if family == "f1":
        d = family1_pair(params["t"])
        return d.C, d.C_minus, 1, d.provenance, None
    if family == "f2":
        d = family2_construct(params["v"])
        return d.C.dual, d.C_prime.dual, squarefree_part(d.splitting_disc), d.provenance, None
    r, s, t = params["r"], params["s"], params["t"]
    data = crst_curve(r, s, t)
    gc = galois_condition(r, s, t, data)
    if not gc.holds:
        raise ParameterExcluded("Delta * Delta' is not a square in L")
    pair = gensimple_pair(r, s, t, data)
    return pair.dual.dual, pair.dual_prime.dual, squarefree_part(pair.splitting_disc), data.provenance, gc.to_json()


@main.command()
@click.argument("family", type=click.Choice(["f1", "f2", "crst", "g3"]))
@click.option("--t", "t_", help="parameter t (f1, crst, g3), as p/q")
@click.option("--v", "v_", help="parameter v (f2), as p/q")
@click.option("--r", "r_", help="parameter r (crst), as p/q")
@click.option("--s", "s_", help="parameter s (crst), as p/q")
@click.option("--primes", help="comma-separated primes for the Frobenius sweep")
@click.option("--max-prime", type=int, help="sweep all odd primes below this bound")
@click.option("--out", type=click.Path(dir_okay=False, writable=True), help="write JSON here instead of stdout")
def gen(family, t_, v_, r_, s_, primes, max_prime, out):
    """Generate a pair of curves from a family, with a certificate."""

    def go():
        if family == "f1":
            params = {"t": _rat(t_, "t")}
        elif family == "f2":
            params = {"v": _rat(v_, "v")}
        elif family == "crst":
            params = {"r": _rat(r_, "r"), "s": _rat(s_, "s"), "t": _rat(t_, "t")}
        else:
            params = {"t": _rat(t_, "t")}
        if family == "g3":
            from .genus3 import genus3_pair, hyperelliptic_octic_model

            pair = genus3_pair(params["t"])
            octic = hyperelliptic_octic_model(params["t"])
            ps = _prime_list(primes, max_prime, 0) if (primes or max_prime) else [11, 13, 17]
            cert = genus3_certificate(octic, pair.Q, ps, f"g3:t={fmt_rational(params['t'])}", pair.provenance, pair.elliptic)
            rec = {"family": family, "params": params, "curves": [octic.to_json(), pair.Q.to_json()], "data": pair.to_json(), "certificate": cert}
        else:
            c1, c2, m, prov, gc = _gen_genus2(family, params)
            label = family + ":" + ",".join(f"{k}={fmt_rational(v)}" for k, v in sorted(params.items()))
            rec = {"family": family, "params": params, "curves": [c1.to_json(), c2.to_json()]}
            pub = _published_for(family, params)
            transforms = _TRANSFORMS.get(pub.label, []) if pub else []
            if pub is not None:
                rec["published"] = pub.to_json()
                if {"first", "second"} <= set(pub.curves):
                    c1, c2 = pub.curves["first"], pub.curves["second"]
                    if not isinstance(c1, Genus2Curve):
                        c1 = c1.to_curve()
            ps = _prime_list(primes, max_prime, 100)
            rec["certificate"] = genus2_certificate(c1, c2, m, ps, label, prov, gc, [{"convention": _TRANSFORM_NOTE}] + transforms if transforms else [])
        pub = _published_for(family, params) if family == "g3" else None
        if pub is not None:
            rec["published"] = pub.to_json()
        emit(rec, out)

    _run(go)


# -- verify ---------------------------------------------------------------------------


def _load_curve(rec: dict):
    from .genus3 import HyperellipticModel, PlaneQuartic

    if rec.get("kind") == "plane_quartic":
        return PlaneQuartic.from_json(rec)
    if rec.get("genus", 2) == 3:
        return HyperellipticModel.from_json(rec)
    return Genus2Curve.from_json(rec)


def _load_pair(files) -> tuple:
    recs = []
    meta = {}
    for path in files:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
        if isinstance(doc, dict) and "curves" in doc:
            recs.extend(doc["curves"])
            cert = doc.get("certificate", doc)
            if "splitting_field_m" in cert:
                meta.setdefault("m", cert["splitting_field_m"])
        else:
            recs.append(doc)
    if len(recs) != 2:
        raise BadInput(f"expected two curve records, found {len(recs)}")
    return _load_curve(recs[0]), _load_curve(recs[1]), meta


@main.command()
@click.argument("files", nargs=-1, required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("--m", "m_", type=int, help="splitting field Q(sqrt m) of the isomorphism")
@click.option("--primes", help="comma-separated primes")
@click.option("--max-prime", type=int, help="sweep all odd primes below this bound")
@click.option("--out", type=click.Path(dir_okay=False, writable=True))
def verify(files, m_, primes, max_prime, out):
    """Certify a pair of curves given as one pair file or two curve files."""

    def go():
        c1, c2, meta = _load_pair(files)
        if isinstance(c1, Genus2Curve) != isinstance(c2, Genus2Curve):
            raise BadInput("the two curves have different genus")
        if isinstance(c1, Genus2Curve):
            m = m_ if m_ is not None else int(meta.get("m", 1))
            cert = genus2_certificate(c1, c2, m, _prime_list(primes, max_prime, 100), "verify")
        else:
            ps = _prime_list(primes, max_prime, 0) if (primes or max_prime) else [11, 13, 17]
            cert = genus3_certificate(c1, c2, ps, "verify")
        emit(cert, out)

    _run(go)


@main.command("check-certificate")
@click.argument("file", type=click.Path(exists=True, dir_okay=False))
def check_certificate(file):
    """Recheck the verdicts of a certificate from its embedded data."""

    def go():
        with open(file, encoding="utf-8") as fh:
            doc = json.load(fh)
        cert = doc.get("certificate", doc)
        res = validate_certificate(cert)
        emit(res, None)
        if not all(res.values()):
            sys.exit(1)

    _run(go)


# -- reproduce-examples ---------------------------------------------------------------


@main.command("reproduce-examples")
@click.option("--json", "as_json", is_flag=True, help="print a JSON report instead of text")
def reproduce_examples(as_json):
    """Regenerate the worked examples and report each check."""

    def go():
        from .examples import reproduce_all

        results = reproduce_all()
        if as_json:
            emit([r.to_json() for r in results], None)
        else:
            for r in results:
                for c in r.checks:
                    click.echo(f"{'PASS' if c.ok else 'FAIL'} {r.label}: {c.name}")
                    if not c.ok:
                        click.echo(f"  expected: {c.expected}\n  got:      {c.got}")
            n_fail = sum(not c.ok for r in results for c in r.checks)
            click.echo(f"{'all checks passed' if not n_fail else f'{n_fail} checks failed'}")
        if not all(r.ok for r in results):
            sys.exit(1)

    _run(go)


# -- surface --------------------------------------------------------------------------


@main.command()
@click.option("--s0", help="fiber s = s0, as p/q")
@click.option("--n", type=int, default=1, show_default=True, help="use n*P")
@click.option("--addT", "add_t", is_flag=True, help="use n*P + T")
@click.option("--fixture", help="use a named rational curve on the surface instead of n*P")
@click.option("--w", "w_", help="parameter value on the rational curve")
@click.option("--primes", help="comma-separated primes for the certificate")
@click.option("--max-prime", type=int, default=60, show_default=True)
@click.option("--out", type=click.Path(dir_okay=False, writable=True))
def surface(s0, n, add_t, fixture, w_, primes, max_prime, out):
    """A triple (r, s, s - 1) from the elliptic surface and its pair of Richelot duals."""

    def go():
        from .families import crst_curve, galois_condition, gensimple_pair
        from .surface import rational_curve_fixtures, surface_triple, triple_from_fixture

        if fixture:
            if fixture not in rational_curve_fixtures():
                raise BadInput(f"unknown fixture {fixture!r}; choose from {sorted(rational_curve_fixtures())}")
            r, s, t = triple_from_fixture(fixture, _rat(w_, "w"))
            origin = {"fixture": fixture, "w": _rat(w_, "w")}
        else:
            tr = surface_triple(_rat(s0, "s0"), n, add_t)
            r, s, t = tr.r, tr.s, tr.t
            origin = tr.to_json()["origin"]
        data = crst_curve(r, s, t)
        gc = galois_condition(r, s, t, data)
        rec = {"triple": {"r": r, "s": s, "t": t, "origin": origin}, "galois_condition": gc.to_json()}
        if gc.holds:
            pair = gensimple_pair(r, s, t, data)
            c1, c2 = pair.dual.dual, pair.dual_prime.dual
            m = squarefree_part(pair.splitting_disc)
            rec["curves"] = [c1.to_json(), c2.to_json()]
            label = f"surface:r={fmt_rational(r)},s={fmt_rational(s)},t={fmt_rational(t)}"
            rec["certificate"] = genus2_certificate(
                c1, c2, m, _prime_list(primes, max_prime, 60), label, data.provenance, gc.to_json()
            )
        emit(rec, out)

    _run(go)


# -- r-certificate --------------------------------------------------------------------


@main.command("r-certificate")
@click.option("--out", type=click.Path(dir_okay=False, writable=True))
def r_certificate_cmd(out):
    """Resultant certificate for the common zeros of the R polynomials."""

    def go():
        from .igusa import r_certificate

        cert = r_certificate()
        cert["gcd_resultants"] = str(cert["gcd_resultants"])
        cert["odd_part"] = str(cert["odd_part"])
        cert["odd_part_factored"]["other"] = str(cert["odd_part_factored"]["other"])
        lift = lambda f: f.map(lambda c: Fraction(c.lift())).pretty("t")  # noqa: E731
        for p in (3, 11):
            cert[f"gcd_F{p}"] = lift(cert[f"gcd_F{p}"])
            cert[f"gcd_F{p}_factors"] = [lift(f) for f in cert[f"gcd_F{p}_factors"]]
        emit(cert, out)

    _run(go)


if __name__ == "__main__":
    main()
