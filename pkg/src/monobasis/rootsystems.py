"""Test systems with explicitly enumerable root sets.

Systems of the form f_i = x_i^{d_i} - b_i^{d_i} have exactly
d_1 * ... * d_n simple common roots (a grid of scaled roots of unity) as
long as the field contains the needed roots of unity and the b_i are
non-zero.  A change of variables by an invertible matrix keeps the roots
computable while destroying the special monomial structure -- which makes
these systems good stress inputs for the certification identities.
"""
from __future__ import annotations

import itertools
import math

from .errors import InputError, NotFullRank, ShapeError
from .fields import PrimeField, RationalField
from .linalg import Matrix
from .polynomials import MultiPoly, PolySystem

__all__ = [
    "linear_transform",
    "power_system",
    "primitive_root",
    "roots_of_unity",
    "transform_roots",
]


def primitive_root(p: int) -> int:
    """Smallest generator of the multiplicative group of F_p."""
    if p == 2:
        return 1
    factors = set()
    m = p - 1
    d = 2
    while d * d <= m:
        while m % d == 0:
            factors.add(d)
            m //= d
        d += 1
    if m > 1:
        factors.add(m)
    for g in range(2, p):
        if all(pow(g, (p - 1) // q, p) != 1 for q in factors):
            return g
    raise InputError(f"{p} does not look prime")


def roots_of_unity(field, d: int) -> list:
    """All d-th roots of unity in the field, or InputError if fewer than d."""
    if d < 1:
        raise InputError("order must be positive")
    if isinstance(field, RationalField):
        if d == 1:
            return [field.one]
        if d == 2:
            return [field.one, -field.one]
        raise InputError(f"Q has no primitive {d}-th root of unity")
    if isinstance(field, PrimeField):
        if (field.p - 1) % d != 0:
            raise InputError(f"F_{field.p} has no primitive {d}-th root of unity")
        zeta = field.of(pow(primitive_root(field.p), (field.p - 1) // d, field.p))
        return [zeta**k for k in range(d)]
    raise InputError("unsupported field")


def power_system(field, degrees, shifts) -> tuple:
    """(system, roots) for f_i = x_i^{d_i} - b_i^{d_i} with b_i = shifts[i].

    The roots are the full grid (b_1 zeta_1, ..., b_n zeta_n) over all
    choices of d_i-th roots of unity zeta_i; they are pairwise distinct
    and simple when every b_i is non-zero.
    """
    degrees = tuple(int(d) for d in degrees)
    n = len(degrees)
    if len(shifts) != n:
        raise ShapeError("one shift per equation required")
    shifts = [field.of(b) for b in shifts]
    if any(not b for b in shifts):
        raise InputError("shifts must be non-zero to keep the roots simple")
    polys = []
    for i, (d, b) in enumerate(zip(degrees, shifts)):
        mono = tuple(d if j == i else 0 for j in range(n))
        polys.append(
            MultiPoly.monomial(field, mono)
            - MultiPoly.constant(field, n, b**d)
        )
    axis_roots = [
        [b * z for z in roots_of_unity(field, d)] for d, b in zip(degrees, shifts)
    ]
    roots = [tuple(pt) for pt in itertools.product(*axis_roots)]
    assert len(set(roots)) == math.prod(degrees)
    return PolySystem(polys, degrees), roots


def linear_transform(sys: PolySystem, L: Matrix) -> PolySystem:
    """Compose every equation with x -> L x (degrees are preserved)."""
    n = sys.nvars
    if L.nrows != n or L.ncols != n:
        raise ShapeError("change-of-variables matrix has the wrong shape")
    replacements = []
    for i in range(n):
        row = MultiPoly.zero(sys.field, n)
        for j in range(n):
            c = L[i, j]
            if c:
                mono = tuple(1 if k == j else 0 for k in range(n))
                row = row + MultiPoly.monomial(sys.field, mono, c)
        replacements.append(row)
    return PolySystem([f.substitute(replacements) for f in sys.polys], sys.degrees)


def transform_roots(roots, L: Matrix) -> list:
    """Roots of the composed system: y = L^{-1} x for each original root x."""
    try:
        inv = L.inverse()
    except NotFullRank:
        raise InputError("change of variables must be invertible")
    out = []
    for pt in roots:
        col = Matrix(L.field, [[x] for x in pt], ncols=1)
        y = inv @ col
        out.append(tuple(y[i, 0] for i in range(len(pt))))
    return out
