"""Double cosets of GL(3) parahoric subgroups and intertwining numbers."""

import json

from ._core import (
    Error,
    InvalidTriple,
    LevelTooSmall,
    Oracle,
    OutOfRange,
    QPoly,
    ScaleExceeded,
    catalog_by_weyl,
    catalog_count,
    descendants,
    dim_V,
    in_T,
    index_in_K,
    intertwine_restricted,
    intertwine_VU,
    materialize,
    steinberg_positivity,
)
from . import _core

__version__ = "1.0.0"


def intertwine_VV(c, d):
    """Report dict with total, by_weyl and by_triple (coefficient lists)."""
    return json.loads(_core._intertwine_VV(tuple(c), tuple(d)))


def verify(claim, bound=6):
    return json.loads(_core._verify(claim, bound))


def cross_validate(p, N, bound, jobs=1):
    return json.loads(_core._cross_validate(p, N, tuple(bound), jobs))


def steinberg(r):
    """[S_r] in the V basis as {"basis": "V", "terms": [...]}."""
    return json.loads(_core._steinberg(r))


__all__ = [
    "Error",
    "InvalidTriple",
    "LevelTooSmall",
    "Oracle",
    "OutOfRange",
    "QPoly",
    "ScaleExceeded",
    "catalog_by_weyl",
    "catalog_count",
    "cross_validate",
    "descendants",
    "dim_V",
    "in_T",
    "index_in_K",
    "intertwine_VU",
    "intertwine_VV",
    "intertwine_restricted",
    "materialize",
    "steinberg",
    "steinberg_positivity",
    "verify",
]
