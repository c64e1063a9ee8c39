from .polynomials import b_at_zero, log_poly_pair, poly_A, poly_B, poly_C, poly_D

__all__ = [
    "b_at_zero",
    "log_poly_pair",
    "poly_A",
    "poly_B",
    "poly_C",
    "poly_D",
]
