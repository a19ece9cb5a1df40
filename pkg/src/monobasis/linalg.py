"""Dense exact matrices over Q or F_p.

Determinants use fraction-free (Bareiss) elimination over the rationals
and plain Gaussian elimination modulo p; pivot choice is always the first
non-zero entry in a fixed scan order, so every run is reproducible.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .errors import NotFullRank, ShapeError
from .fields import FpElement, PrimeField

__all__ = ["Matrix", "MinorSelection", "select_nonzero_maximal_minor"]


def _raw(field, rows):
    """Unwrap to plain ints (mod p) or Fractions for the inner loops."""
    if isinstance(field, PrimeField):
        return [[e.val for e in row] for row in rows], field.p
    return [[Fraction(e) for e in row] for row in rows], None


def _wrap(field, value):
    if isinstance(field, PrimeField):
        return FpElement(value, field.p)
    return Fraction(value)


def _det_mod(rows, p: int) -> int:
    n = len(rows)
    det = 1
    for col in range(n):
        piv = next((r for r in range(col, n) if rows[r][col] % p), None)
        if piv is None:
            return 0
        if piv != col:
            rows[col], rows[piv] = rows[piv], rows[col]
            det = -det
        pv = rows[col][col] % p
        det = det * pv % p
        inv = pow(pv, p - 2, p)
        for r in range(col + 1, n):
            f = rows[r][col] % p
            if f:
                mult = f * inv % p
                rr, rc = rows[r], rows[col]
                for c in range(col, n):
                    rr[c] = (rr[c] - mult * rc[c]) % p
    return det % p


def _det_bareiss(rows) -> Fraction:
    # scale each row to integers, run integer Bareiss, undo the scaling
    n = len(rows)
    scale = 1
    int_rows = []
    for row in rows:
        mult = lcm(*(f.denominator for f in row)) if row else 1
        scale *= mult
        int_rows.append([int(f * mult) for f in row])
    m = int_rows
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            piv = next((r for r in range(k + 1, n) if m[r][k]), None)
            if piv is None:
                return Fraction(0)
            m[k], m[piv] = m[piv], m[k]
            sign = -sign
        akk = m[k][k]
        for i in range(k + 1, n):
            mi, mk = m[i], m[k]
            aik = mi[k]
            for j in range(k + 1, n):
                mi[j] = (mi[j] * akk - aik * mk[j]) // prev
            mi[k] = 0
        prev = akk
    return Fraction(sign * m[n - 1][n - 1], scale)


class Matrix:
    """Immutable dense matrix with optional row/column labels."""

    __slots__ = ("field", "nrows", "ncols", "rows", "row_labels", "col_labels")

    def __init__(self, field, rows, ncols=None, row_labels=None, col_labels=None):
        rows = [list(r) for r in rows]
        self.field = field
        self.nrows = len(rows)
        if rows:
            self.ncols = len(rows[0])
            if ncols is not None and ncols != self.ncols:
                raise ShapeError("explicit ncols disagrees with row data")
        else:
            if ncols is None:
                raise ShapeError("empty matrix needs an explicit column count")
            self.ncols = ncols
        if any(len(r) != self.ncols for r in rows):
            raise ShapeError("ragged rows")
        self.rows = rows
        for labels, count, axis in (
            (row_labels, self.nrows, "row"),
            (col_labels, self.ncols, "column"),
        ):
            if labels is not None:
                labels = tuple(labels)
                if len(labels) != count or len(set(labels)) != count:
                    raise ShapeError(f"{axis} labels must be unique and match the shape")
        self.row_labels = tuple(row_labels) if row_labels is not None else None
        self.col_labels = tuple(col_labels) if col_labels is not None else None

    # -- constructors -------------------------------------------------
    @classmethod
    def zeros(cls, field, nrows, ncols):
        z = field.zero
        return cls(field, [[z] * ncols for _ in range(nrows)], ncols=ncols)

    @classmethod
    def identity(cls, field, n):
        z, o = field.zero, field.one
        return cls(field, [[o if i == j else z for j in range(n)] for i in range(n)])

    # -- basics -------------------------------------------------------
    def __getitem__(self, key):
        i, j = key
        return self.rows[i][j]

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.field == other.field
            and self.nrows == other.nrows
            and self.ncols == other.ncols
            and self.rows == other.rows
        )

    def is_zero(self) -> bool:
        return all(not e for row in self.rows for e in row)

    def transpose(self) -> "Matrix":
        return Matrix(
            self.field,
            [[self.rows[i][j] for i in range(self.nrows)] for j in range(self.ncols)],
            ncols=self.nrows,
            row_labels=self.col_labels,
            col_labels=self.row_labels,
        )

    def submatrix(self, row_idx, col_idx) -> "Matrix":
        row_idx = list(row_idx)
        col_idx = list(col_idx)
        return Matrix(
            self.field,
            [[self.rows[i][j] for j in col_idx] for i in row_idx],
            ncols=len(col_idx),
            row_labels=[self.row_labels[i] for i in row_idx] if self.row_labels else None,
            col_labels=[self.col_labels[j] for j in col_idx] if self.col_labels else None,
        )

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.nrows:
            raise ShapeError("inner dimensions disagree")
        z = self.field.zero
        out = []
        for i in range(self.nrows):
            row = []
            for j in range(other.ncols):
                acc = z
                for k in range(self.ncols):
                    a = self.rows[i][k]
                    if a:
                        acc = acc + a * other.rows[k][j]
                row.append(acc)
            out.append(row)
        return Matrix(self.field, out, ncols=other.ncols)

    def __neg__(self):
        return Matrix(self.field, [[-e for e in r] for r in self.rows], ncols=self.ncols)

    # -- exact linear algebra ------------------------------------------
    def det(self):
        if self.nrows != self.ncols:
            raise ShapeError("determinant of a non-square matrix")
        if self.nrows == 0:
            return self.field.one
        raw, p = _raw(self.field, self.rows)
        if p is not None:
            return _wrap(self.field, _det_mod(raw, p))
        return _det_bareiss(raw)

    def rank(self) -> int:
        raw, p = _raw(self.field, self.rows)
        return _echelon_rank(raw, p, self.ncols)

    def solve(self, rhs: "Matrix"):
        """A particular solution X of self @ X = rhs, or None if inconsistent.

        Free variables are set to zero; the pivot scan order is fixed, so
        the returned solution is deterministic.
        """
        if rhs.nrows != self.nrows:
            raise ShapeError("right-hand side has the wrong number of rows")
        a, p = _raw(self.field, self.rows)
        b, _ = _raw(self.field, rhs.rows)
        aug = [a[i] + b[i] for i in range(self.nrows)]
        n, m, k = self.nrows, self.ncols, rhs.ncols
        width = m + k
        pivots = []
        r = 0
        for c in range(m):
            piv = None
            for i in range(r, n):
                if (aug[i][c] % p if p else aug[i][c]) != 0:
                    piv = i
                    break
            if piv is None:
                continue
            aug[r], aug[piv] = aug[piv], aug[r]
            pv = aug[r][c]
            inv = pow(pv, p - 2, p) if p else 1 / pv
            aug[r] = [
                (e * inv % p) if p else e * inv for e in aug[r]
            ]
            for i in range(n):
                if i != r:
                    f = aug[i][c] % p if p else aug[i][c]
                    if f:
                        ar = aug[r]
                        ai = aug[i]
                        for j in range(c, width):
                            ai[j] = (ai[j] - f * ar[j]) % p if p else ai[j] - f * ar[j]
            pivots.append((r, c))
            r += 1
            if r == n:
                break
        for i in range(r, n):
            if any((aug[i][j] % p if p else aug[i][j]) != 0 for j in range(m, width)):
                return None
        sol = [[0 if p else Fraction(0)] * k for _ in range(m)]
        for rr, c in pivots:
            for j in range(k):
                sol[c][j] = aug[rr][m + j]
        return Matrix(
            self.field,
            [[_wrap(self.field, v) for v in row] for row in sol],
            ncols=k,
        )

    def inverse(self) -> "Matrix":
        if self.nrows != self.ncols:
            raise ShapeError("inverse of a non-square matrix")
        inv = self.solve(Matrix.identity(self.field, self.nrows))
        if inv is None or not (self @ inv == Matrix.identity(self.field, self.nrows)):
            raise NotFullRank("matrix is singular")
        return inv

    def __repr__(self):
        return f"Matrix({self.nrows}x{self.ncols} over {self.field.name})"


def _echelon_rank(rows, p, ncols) -> int:
    rank = 0
    nrows = len(rows)
    for c in range(ncols):
        piv = None
        for i in range(rank, nrows):
            if (rows[i][c] % p if p else rows[i][c]) != 0:
                piv = i
                break
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        pv = rows[rank][c]
        for i in range(rank + 1, nrows):
            f = rows[i][c] % p if p else rows[i][c]
            if f:
                mult = (f * pow(pv, p - 2, p) % p) if p else f / pv
                ri, rr = rows[i], rows[rank]
                for j in range(c, ncols):
                    ri[j] = (ri[j] - mult * rr[j]) % p if p else ri[j] - mult * rr[j]
        rank += 1
        if rank == min(nrows, ncols):
            break
    return rank


@dataclass(frozen=True)
class MinorSelection:
    """A non-zero maximal minor: sorted index sets and its determinant."""

    row_indices: tuple
    col_indices: tuple
    minor_value: object


def select_nonzero_maximal_minor(m: Matrix, axis: str) -> MinorSelection:
    """Deterministic greedy choice of a non-zero maximal minor.

    ``axis="cols"`` assumes the matrix is onto (full row rank) and picks
    column indices; ``axis="rows"`` assumes it is into (full column rank)
    and picks row indices.  Raises NotFullRank when the assumption fails.
    """
    if axis == "cols":
        target = m.nrows
        vec_count = m.ncols
        get = lambda idx: [m.rows[i][idx] for i in range(m.nrows)]
    elif axis == "rows":
        target = m.ncols
        vec_count = m.nrows
        get = lambda idx: list(m.rows[idx])
    else:
        raise ValueError("axis must be 'rows' or 'cols'")

    p = m.field.p if isinstance(m.field, PrimeField) else None
    chosen = []
    basis = []  # (pivot position, normalized reduced vector)
    for idx in range(vec_count):
        if len(chosen) == target:
            break
        raw = get(idx)
        v = [e.val for e in raw] if p else [Fraction(e) for e in raw]
        for pos, bv in basis:
            f = v[pos]
            if f:
                for j in range(len(v)):
                    v[j] = (v[j] - f * bv[j]) % p if p else v[j] - f * bv[j]
        pos = next((j for j, e in enumerate(v) if (e % p if p else e) != 0), None)
        if pos is None:
            continue
        inv = pow(v[pos], p - 2, p) if p else 1 / v[pos]
        v = [(e * inv % p) if p else e * inv for e in v]
        basis.append((pos, v))
        chosen.append(idx)
    if len(chosen) < target:
        raise NotFullRank(
            f"no non-zero maximal minor along axis={axis} "
            f"({len(chosen)} of {target} independent vectors)"
        )
    if axis == "cols":
        rows, cols = tuple(range(m.nrows)), tuple(chosen)
    else:
        rows, cols = tuple(chosen), tuple(range(m.ncols))
    value = m.submatrix(rows, cols).det()
    return MinorSelection(rows, cols, value)
