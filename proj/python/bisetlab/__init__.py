"""Exact computations with shifted Green biset functors (kR_F)_T and kB_T."""

import json
from fractions import Fraction

from . import _core
from ._core import (
    DEFAULT_CAP,
    BisetlabError,
    basis_labels,
    catalog,
    catalog_add,
    catalog_hash,
    character_table,
    set_threads,
)

__all__ = [
    "DEFAULT_CAP",
    "BisetlabError",
    "autmult",
    "basis_labels",
    "catalog",
    "catalog_add",
    "catalog_hash",
    "certify",
    "character_table",
    "compose_basis",
    "essential",
    "gram",
    "nondeg",
    "oracle",
    "radical",
    "set_threads",
]


def _report(fn):
    def wrapped(*args, **kwargs):
        return json.loads(fn(*args, **kwargs))

    wrapped.__name__ = fn.__name__
    wrapped.__doc__ = fn.__doc__
    return wrapped


gram = _report(_core.gram)
nondeg = _report(_core.nondeg)
radical = _report(_core.radical)
certify = _report(_core.certify)
essential = _report(_core.essential)
oracle = _report(_core.oracle)
autmult = _report(_core.autmult)


def compose_basis(H, G, K, T="C1", field="rational", i=0, j=0, cap=DEFAULT_CAP):
    """Coefficients of beta_i o alpha_j, beta_i: G -> H and alpha_j: K -> G, as Fractions."""
    return [Fraction(c) for c in _core.compose_basis(H, G, K, T, field, i, j, cap)]
