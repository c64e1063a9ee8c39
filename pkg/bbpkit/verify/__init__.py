from .interval import interval_digits
from .reference import reference, pi_interval
from .evaluate import eval_bbp, verify_formula
from .digits import digit_extract
from .egyptian import egyptian_check, egyptian_tail

__all__ = [
    "interval_digits",
    "reference",
    "pi_interval",
    "eval_bbp",
    "verify_formula",
    "digit_extract",
    "egyptian_check",
    "egyptian_tail",
]
