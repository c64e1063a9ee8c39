from .transforms import (
    block,
    canonicalize,
    combine,
    dilate,
    distribute,
    efficiency,
    fold_leading,
    normalize,
    product_form,
    split_re_im,
    split_result,
    to_positive_base,
)
from .series import (
    binary_family,
    log_three_halves,
    make_series,
    partial_fractions,
    rearrangement_check,
    regroup,
    smallest_period,
)
from .catalog import CATALOG, catalog, catalog_entry, catalog_names, regenerate
from .subgroup import subgroup_decompose, subgroup_formula
from .display import render_formula, render_product_form, render_tag

__all__ = [
    "block",
    "canonicalize",
    "combine",
    "dilate",
    "distribute",
    "efficiency",
    "fold_leading",
    "normalize",
    "product_form",
    "split_re_im",
    "split_result",
    "to_positive_base",
    "binary_family",
    "log_three_halves",
    "make_series",
    "partial_fractions",
    "rearrangement_check",
    "regroup",
    "smallest_period",
    "CATALOG",
    "catalog",
    "catalog_entry",
    "catalog_names",
    "regenerate",
    "subgroup_decompose",
    "subgroup_formula",
    "render_formula",
    "render_product_form",
    "render_tag",
]
