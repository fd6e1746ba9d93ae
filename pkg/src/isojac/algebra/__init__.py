"""Exact arithmetic kernel."""

from .etale import EtaleAlgebra, EtaleElement, NotInvertible, is_square_in_etale, sqrt_in_etale
from .factor import factor_over_base, rational_roots
from .poly import Poly
from .resultant import discriminant, resultant, resultant_zz
from .scalars import GF, Fp, FqElem, fmt_rational, is_square_rational, parse_rational, to_fraction

__all__ = [
    "EtaleAlgebra",
    "EtaleElement",
    "Fp",
    "FqElem",
    "GF",
    "NotInvertible",
    "Poly",
    "discriminant",
    "factor_over_base",
    "fmt_rational",
    "is_square_in_etale",
    "is_square_rational",
    "parse_rational",
    "rational_roots",
    "resultant",
    "resultant_zz",
    "sqrt_in_etale",
    "to_fraction",
]
