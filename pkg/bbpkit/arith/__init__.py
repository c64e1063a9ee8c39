from .rational import (
    Rational,
    binomial,
    format_rational,
    harmonic,
    parse_rational,
    rational_content,
)
from .gaussian import (
    GaussianRational,
    Scalar,
    format_gaussian,
    gauss_pow,
    parse_gaussian,
    realify,
)
from .poly import Poly

__all__ = [
    "Rational",
    "binomial",
    "format_rational",
    "harmonic",
    "parse_rational",
    "rational_content",
    "GaussianRational",
    "Scalar",
    "format_gaussian",
    "gauss_pow",
    "parse_gaussian",
    "realify",
    "Poly",
]
