"""Determinant of an exact complex via the two standard decompositions.

Both procedures split each term of the complex with a deterministically
chosen non-zero maximal minor and return the alternating product
prod det(phi_{i+1})^((-1)^i).  The two results agree up to sign on every
exact complex; when a stage has no non-zero maximal minor the complex is
not exact and NotExact is raised (callers read this as "determinant 0").
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import NotExact, NotFullRank
from .koszul import GradedComplex
from .linalg import MinorSelection, select_nonzero_maximal_minor

__all__ = [
    "DecompositionTrace",
    "decompose_ascending",
    "decompose_descending",
    "det_complex_ascending",
    "det_complex_descending",
]


@dataclass(frozen=True)
class DecompositionTrace:
    """Per-stage minors and determinants, and the final alternating product."""

    direction: str
    stage_minors: tuple  # MinorSelection or None (empty stage) per map index 1..s
    stage_dets: tuple
    delta: object


def _alternating_product(field, dets):
    # dets[i] is det(phi_{i+1}); exponent (-1)^i
    delta = field.one
    for i, d in enumerate(dets):
        delta = delta * d if i % 2 == 0 else delta / d
    return delta


def decompose_ascending(c: GradedComplex) -> DecompositionTrace:
    """Splitting from the right-most term, choosing column sets."""
    dims = c.dims()
    field = c.field
    rows = list(range(dims[0]))
    minors = []
    dets = []
    for k in range(1, c.s + 1):
        d_k = c.differentials[k - 1]
        if not rows:
            minors.append(None)
            dets.append(field.one)
            rows = list(range(dims[k]))
            continue
        restricted = d_k.submatrix(rows, range(dims[k]))
        try:
            sel = select_nonzero_maximal_minor(restricted, "cols")
        except NotFullRank:
            raise NotExact(f"stage {k}: restricted differential is not onto") from None
        minors.append(sel)
        dets.append(sel.minor_value)
        chosen = set(sel.col_indices)
        rows = [j for j in range(dims[k]) if j not in chosen]
    if rows:
        raise NotExact("leftover basis elements after the last term")
    return DecompositionTrace(
        "ascending", tuple(minors), tuple(dets), _alternating_product(field, dets)
    )


def decompose_descending(c: GradedComplex) -> DecompositionTrace:
    """Splitting from the left-most term, choosing row sets."""
    dims = c.dims()
    field = c.field
    if c.s == 0:
        if dims[0]:
            raise NotExact("no differentials but a non-trivial target")
        return DecompositionTrace("descending", (), (), field.one)
    minors = [None] * c.s
    dets = [field.one] * c.s
    cols = list(range(dims[c.s]))
    for k in range(c.s, 1, -1):
        d_k = c.differentials[k - 1]
        if not cols:
            cols = list(range(dims[k - 1]))
            continue
        restricted = d_k.submatrix(range(dims[k - 1]), cols)
        try:
            sel = select_nonzero_maximal_minor(restricted, "rows")
        except NotFullRank:
            raise NotExact(f"stage {k}: restricted differential is not into") from None
        minors[k - 1] = sel
        dets[k - 1] = sel.minor_value
        chosen = set(sel.row_indices)
        cols = [i for i in range(dims[k - 1]) if i not in chosen]
    if len(cols) != dims[0]:
        raise NotExact("final stage is not square")
    if dims[0]:
        restricted = c.differentials[0].submatrix(range(dims[0]), cols)
        value = restricted.det()
        if not value:
            raise NotExact("final square matrix is singular")
        dets[0] = value
    return DecompositionTrace(
        "descending", tuple(minors), tuple(dets), _alternating_product(field, dets)
    )


def det_complex_ascending(c: GradedComplex):
    """Determinant of the complex by the ascending decomposition."""
    return decompose_ascending(c).delta


def det_complex_descending(c: GradedComplex):
    """Determinant of the complex by the descending decomposition."""
    return decompose_descending(c).delta
