"""Certification of monomial bases of K[x1..xn]/(f1..fn).

The headline test multiplies the resultant of the leading forms by the
multivariate subresultant of the homogenized set at level delta(M); the
set is a basis exactly when the product is non-zero.  An independent rank
test on the graded pieces provides the cross-checking oracle, and the
generalized Vandermonde identities tie both to root data on systems whose
roots are known in closed form.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import InputError, ShapeError
from .hilbert import DegreeProfile, hilbert_h
from .linalg import Matrix
from .polynomials import (
    MonomialSet,
    MultiPoly,
    PolySystem,
    homogenize,
    m0_set,
    mono_key,
    monomials_of_degree,
)
from .resultants import classical_subresultants, resultant_macaulay
from .subresultants import subresultant_D, subresultant_delta

__all__ = [
    "BasisCertificate",
    "FactorizationReport",
    "MultiplicationMatrix",
    "VandermondeReport",
    "certify_basis",
    "degree_bound_reject",
    "factorize_delta",
    "multiplication_matrix",
    "rank_oracle",
    "sign_constant",
    "upsilon_bivariate",
    "vandermonde_verify",
]


# ---------------------------------------------------------------------------
# certificates


@dataclass(frozen=True)
class BasisCertificate:
    res_value: object
    delta_value: object
    t_used: int
    verdict: str  # "basis" | "not-basis"
    product: object

    @property
    def is_basis(self) -> bool:
        return self.verdict == "basis"


def degree_bound_reject(M: MonomialSet, profile: DegreeProfile) -> bool:
    """True when delta(M) < rho, which already rules out a basis."""
    return M.delta < profile.rho


def certify_basis(sys: PolySystem, M: MonomialSet) -> BasisCertificate:
    """Res(leading forms) * Delta^delta(M_delta): non-zero iff M is a basis."""
    profile = DegreeProfile(sys.degrees)
    if sys.nvars != sys.n:
        raise ShapeError("certification expects an affine square system")
    if M.nvars != sys.n:
        raise ShapeError("monomial set lives in the wrong variable count")
    if len(M) != profile.bezout:
        raise InputError(
            f"candidate set has {len(M)} monomials, expected {profile.bezout}"
        )
    res = resultant_macaulay(sys.leading_forms())
    delta = M.delta
    sub = subresultant_delta(sys.homogenized(), delta, M.homogenized_at(delta))
    product = res * sub.value
    verdict = "basis" if product else "not-basis"
    return BasisCertificate(res, sub.value, delta, verdict, product)


# ---------------------------------------------------------------------------
# the independent rank test


def _poly_row(poly: MultiPoly, index: dict, width: int):
    row = [poly.field.zero] * width
    for m, c in poly.terms.items():
        row[index[m]] = c
    return row


def _graded_generators(hom: PolySystem, t: int):
    """Rows spanning the degree-t piece of the ideal (all monomial multiples)."""
    rows = []
    for f, d in zip(hom.polys, hom.degrees):
        for b in monomials_of_degree(hom.nvars, t - d):
            rows.append(MultiPoly.monomial(hom.field, b) * f)
    return rows


def rank_oracle(sys: PolySystem, M: MonomialSet) -> bool:
    """Plain-rank reformulation of the basis test at t = max(delta, rho).

    Deliberately avoids complexes and determinants: M is a basis iff the
    graded ideal piece has codimension bezout and the homogenized set
    completes it to the whole degree-t space.
    """
    profile = DegreeProfile(sys.degrees)
    if not resultant_macaulay(sys.leading_forms()):
        return False
    t = max(M.delta, profile.rho)
    hom = sys.homogenized()
    monos = monomials_of_degree(hom.nvars, t)
    index = {m: i for i, m in enumerate(monos)}
    width = len(monos)
    gen_rows = [_poly_row(p, index, width) for p in _graded_generators(hom, t)]
    ideal = Matrix(sys.field, gen_rows, ncols=width)
    if ideal.rank() != width - profile.bezout:
        return False
    extra = []
    for m in M.homogenized_at(t):
        row = [sys.field.zero] * width
        row[index[m]] = sys.field.one
        extra.append(row)
    full = Matrix(sys.field, gen_rows + extra, ncols=width)
    return full.rank() == width


# ---------------------------------------------------------------------------
# factorization into n-variable subresultants


@dataclass(frozen=True)
class FactorizationReport:
    applicable: bool
    factors: tuple  # ((t, value), ...)
    product: object


def factorize_delta(leading_forms: PolySystem, M: MonomialSet) -> FactorizationReport:
    """Factor Delta^delta into degree-slice subresultants of the leading forms.

    Applicable only when the degree profile of M matches the Hilbert
    function h at every level 0..rho (then delta(M) = rho and the product
    of the D^t equals Delta^delta up to sign).
    """
    profile = DegreeProfile(leading_forms.degrees)
    field = leading_forms.field
    counts = {}
    for m in M:
        counts[sum(m)] = counts.get(sum(m), 0) + 1
    applicable = all(
        counts.get(t, 0) == hilbert_h(profile, t) for t in range(profile.rho + 1)
    ) and max(counts) <= profile.rho
    if not applicable:
        return FactorizationReport(False, (), field.zero)
    factors = []
    product = field.one
    for t in range(min(profile.degrees), profile.rho + 1):
        value = subresultant_D(leading_forms, t, M.degree_slice(t)).value
        factors.append((t, value))
        product = product * value
    return FactorizationReport(True, tuple(factors), product)


# ---------------------------------------------------------------------------
# Vandermonde identities


def sign_constant(profile: DegreeProfile) -> int:
    """(-1)^E with E = sum_j d_1..d_{j-1} * d_j(d_j-1)/2 * d_{j+1}..d_n."""
    ds = profile.degrees
    e = 0
    for j, d in enumerate(ds):
        e += math.prod(ds[:j]) * (d * (d - 1) // 2) * math.prod(ds[j + 1 :])
    return -1 if e % 2 else 1


@dataclass(frozen=True)
class VandermondeReport:
    roots: tuple
    matrix: Matrix
    det_value: object
    jacobian_product: object
    sign_const: int
    matched_sign: object  # +1, -1 or None
    identity_residual: object
    disp_exact: object  # bool for M = M0, else None
    resultant_value: object
    subresultant_value: object
    t_used: int

    @property
    def holds(self) -> bool:
        return self.matched_sign is not None


def vandermonde_verify(sys: PolySystem, roots, M: MonomialSet) -> VandermondeReport:
    """Check det(M(M))^2 * Res^(2*delta - rho + 1) = +-J * (Delta^delta)^2.

    The caller supplies all bezout-many simple roots; each is verified to
    be a common zero.  For M = M0 the exact sign constant of the classical
    identity is checked as well.
    """
    profile = DegreeProfile(sys.degrees)
    field = sys.field
    roots = [tuple(field.of(x) for x in pt) for pt in roots]
    if len(roots) != profile.bezout:
        raise InputError(f"expected {profile.bezout} roots, got {len(roots)}")
    for pt in roots:
        if len(pt) != sys.n:
            raise InputError("root with the wrong number of coordinates")
        for f in sys.polys:
            if f.evaluate(pt):
                raise InputError(f"supplied point {pt} is not a common root")
    if len(M) != profile.bezout:
        raise InputError("monomial set must have bezout-many elements")

    cols = list(M)
    grid = [
        [MultiPoly.monomial(field, m).evaluate(pt) for m in cols] for pt in roots
    ]
    mat = Matrix(field, grid, ncols=len(cols), col_labels=cols)
    det_value = mat.det()

    jac = sys.jacobian()
    jprod = field.one
    for pt in roots:
        jprod = jprod * jac.evaluate(pt)

    res = resultant_macaulay(sys.leading_forms())
    if not res:
        raise InputError("resultant of the leading forms vanishes")
    delta = M.delta
    sub = subresultant_delta(sys.homogenized(), delta, M.homogenized_at(delta))

    lhs = det_value**2 * res ** (2 * delta - profile.rho + 1)
    rhs = jprod * sub.value**2
    if lhs == rhs:
        matched, residual = 1, field.zero
    elif lhs == -rhs:
        matched, residual = -1, field.zero
    else:
        matched, residual = None, lhs - rhs

    c = sign_constant(profile)
    disp_exact = None
    if set(M) == set(m0_set(profile.degrees)):
        disp_exact = lhs == c * rhs if c == -1 else lhs == rhs
    return VandermondeReport(
        roots=tuple(roots),
        matrix=mat,
        det_value=det_value,
        jacobian_product=jprod,
        sign_const=c,
        matched_sign=matched,
        identity_residual=residual,
        disp_exact=disp_exact,
        resultant_value=res,
        subresultant_value=sub.value,
        t_used=delta,
    )


def upsilon_bivariate(f1: MultiPoly, f2: MultiPoly, d1: int, d2: int):
    """Closed form of det(M(M^1))^2 / J for a bivariate pair, d1 <= d2."""
    if f1.nvars != 2 or f2.nvars != 2:
        raise ShapeError("expected bivariate polynomials")
    if not 1 <= d1 <= d2:
        raise InputError("need 1 <= d1 <= d2")
    field = f1.field
    lead1 = f1.homogeneous_component(d1)
    lead2 = f2.homogeneous_component(d2)
    res = resultant_macaulay(PolySystem([lead1, lead2], (d1, d2)))
    if not res:
        raise InputError("resultant of the leading forms vanishes; undefined")
    subs = classical_subresultants(lead1, lead2, d1, d2)
    num = field.one
    for k in range(1, d1):
        num = num * subs[k] ** 2
    c_top = lead1.coefficient((d1, 0))
    exp = (d2 - d1) * (d2 - d1 + 1)
    if exp:
        num = num * c_top**exp
    rho = d1 + d2 - 2
    value = num / res ** (rho + 1)
    return value if sign_constant(DegreeProfile((d1, d2))) == 1 else -value


def m1_set(d1: int, d2: int) -> MonomialSet:
    """The staircase set {x1^a1 x2^a2 : a1 < d1, a2 <= d1 + d2 - 2a1 - 2}."""
    monos = [
        (a1, a2)
        for a1 in range(d1)
        for a2 in range(d1 + d2 - 2 * a1 - 1)
    ]
    return MonomialSet(monos)


# ---------------------------------------------------------------------------
# multiplication matrices


@dataclass(frozen=True)
class MultiplicationMatrix:
    matrix: Matrix  # bezout x bezout, column j = coordinates of m_j * g
    g: MultiPoly
    kernel_dim: int

    def det(self):
        return self.matrix.det()


def multiplication_matrix(
    sys: PolySystem, M: MonomialSet, g: MultiPoly
) -> MultiplicationMatrix:
    """Matrix of p -> p*g on the quotient, in the certified basis M.

    Reduction solves the graded linear system [ideal generators | M_t]
    at a degree high enough to contain every product m_j * g; the basis
    certificate guarantees the M-coordinates are unique.
    """
    cert = certify_basis(sys, M)
    if not cert.is_basis:
        raise InputError("monomial set is not a certified basis")
    profile = DegreeProfile(sys.degrees)
    d = profile.bezout
    field = sys.field
    delta = M.delta
    if g.is_zero():
        return MultiplicationMatrix(Matrix.zeros(field, d, d), g, d)
    t = max(profile.rho, delta + int(g.degree))
    hom = sys.homogenized()
    monos = monomials_of_degree(hom.nvars, t)
    index = {m: i for i, m in enumerate(monos)}
    width = len(monos)

    gens = _graded_generators(hom, t)
    columns = [_poly_row(p, index, width) for p in gens]
    basis_cols = []
    for m in M.homogenized_at(t):
        col = [field.zero] * width
        col[index[m]] = field.one
        basis_cols.append(col)
    a = Matrix(field, list(map(list, zip(*(columns + basis_cols)))), ncols=len(columns) + d)

    rhs_cols = []
    for m in M:
        prod = MultiPoly.monomial(field, m) * g
        lifted = homogenize(prod, t)
        rhs_cols.append(_poly_row(lifted, index, width))
    b = Matrix(field, list(map(list, zip(*rhs_cols))), ncols=d)

    x = a.solve(b)
    if x is None:
        raise InputError("reduction system inconsistent despite a basis certificate")
    rows = [x.rows[len(columns) + i] for i in range(d)]
    bmat = Matrix(field, rows, ncols=d, row_labels=list(M), col_labels=list(M))
    return MultiplicationMatrix(bmat, g, d - bmat.rank())
