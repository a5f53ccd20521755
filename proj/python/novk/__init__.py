"""Novikov fundamental group workbench.

Python surface over the C++ core: realized finitely presented groups,
free-product words with truncation (zip) maps, generator/relation bounds up
to deck transformations and completion, truncated Laurent series, and the
Novikov homology of connected sums.
"""

from novk._core import (
    ChainComplex,
    Group,
    LaurentSeries,
    NovkError,
    Word,
    fixture,
    l_lambda_dim,
    report_json,
    report_text,
    rho_matrix,
    smith_normal_form,
)

__all__ = [
    "ChainComplex",
    "Group",
    "LaurentSeries",
    "NovkError",
    "Word",
    "fixture",
    "l_lambda_dim",
    "report_json",
    "report_text",
    "rho_matrix",
    "smith_normal_form",
]
