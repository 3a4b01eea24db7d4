"""Exact and certified-numeric geometry of LG(3,6) and its linear sections.

Thin wrapper over the compiled core; all structured values are JSON text and
rationals are exact "p/q" strings.
"""

import json

from ._core import (
    classify,
    exp_map,
    f_value,
    pivot,
    random_section,
    section_report,
    sigma_residual,
    verify_suite,
)

__all__ = [
    "classify",
    "classify_dict",
    "exp_map",
    "f_value",
    "pivot",
    "random_section",
    "section_report",
    "sigma_residual",
    "verify_suite",
]


def classify_dict(point_json):
    """classify(), parsed into a dict."""
    return json.loads(classify(point_json))
