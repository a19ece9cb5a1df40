"""End-to-end certification, Vandermonde identities, multiplication matrices."""
import random
from fractions import Fraction

import pytest

from monobasis import (
    GF,
    QQ,
    DegreeProfile,
    InputError,
    Matrix,
    MonomialSet,
    MultiPoly,
    PolySystem,
    certify_basis,
    degree_bound_reject,
    factorize_delta,
    linear_transform,
    m0_set,
    monomials_of_degree,
    multiplication_matrix,
    power_system,
    rank_oracle,
    sign_constant,
    transform_roots,
    upsilon_bivariate,
    vandermonde_verify,
)
from monobasis.certify import m1_set

from conftest import random_system

F13 = GF(13)
F101 = GF(101)


def qpoly(terms, nvars):
    return MultiPoly(QQ, nvars, {m: Fraction(c) for m, c in terms.items()})


def test_univariate_hand_case():
    """f = x^2 - 1: M = {1, x} is a basis, the Vandermonde matrix on roots
    (1, -1) has determinant -2, and the Jacobian product is -4."""
    f = qpoly({(2,): 1, (0,): -1}, 1)
    sys_ = PolySystem([f], (2,))
    M = MonomialSet([(0,), (1,)])
    cert = certify_basis(sys_, M)
    assert cert.is_basis
    assert rank_oracle(sys_, M)
    rep = vandermonde_verify(sys_, [(1,), (-1,)], M)
    assert rep.det_value**2 == 4
    assert rep.jacobian_product == -4
    assert rep.sign_const == -1
    assert rep.disp_exact is True
    assert rep.matched_sign is not None


def test_sign_constant_values():
    assert sign_constant(DegreeProfile((2,))) == -1
    assert sign_constant(DegreeProfile((2, 2))) == 1
    assert sign_constant(DegreeProfile((2, 2, 2))) == 1
    # E for (2,3): 1*3 + 2*3 = 9, odd
    assert sign_constant(DegreeProfile((2, 3))) == -1


def test_non_basis_detected_and_oracle_agrees():
    """f1 = x1^2 - 1, f2 = x2^2 - 1: {1, x1, x1^2, x1^3} cannot be a basis
    (x1^2 = 1 in the quotient), even though it has the right cardinality."""
    f1 = qpoly({(2, 0): 1, (0, 0): -1}, 2)
    f2 = qpoly({(0, 2): 1, (0, 0): -1}, 2)
    sys_ = PolySystem([f1, f2], (2, 2))
    M = MonomialSet([(0, 0), (1, 0), (2, 0), (3, 0)])
    cert = certify_basis(sys_, M)
    assert not cert.is_basis
    assert rank_oracle(sys_, M) is False


def test_degree_bound_necessary_condition():
    profile = DegreeProfile((2, 3))
    # all six monomials of degree <= 2 give delta = 2 < rho = 3
    low = MonomialSet(
        [(0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (0, 2)]
    )
    assert degree_bound_reject(low, profile)
    sys_, _ = power_system(F13, (2, 3), [1, 1])
    assert not certify_basis(sys_, low).is_basis
    ok = m0_set((2, 3))
    assert not degree_bound_reject(ok, profile)


def test_wrong_cardinality_rejected():
    f1 = qpoly({(2, 0): 1, (0, 0): -1}, 2)
    f2 = qpoly({(0, 2): 1, (0, 0): -1}, 2)
    sys_ = PolySystem([f1, f2], (2, 2))
    with pytest.raises(InputError):
        certify_basis(sys_, MonomialSet([(0, 0), (1, 0), (0, 1)]))


def test_grid_system_certificates():
    for degrees, p in [((2, 2), 13), ((2, 3), 13), ((3, 3), 13), ((2, 2, 2), 13)]:
        F = GF(p)
        sys_, roots = power_system(F, degrees, [1] * len(degrees))
        M = m0_set(degrees)
        cert = certify_basis(sys_, M)
        assert cert.is_basis
        rep = vandermonde_verify(sys_, roots, M)
        assert rep.matched_sign is not None
        assert rep.disp_exact is True


def test_vandermonde_rejects_non_roots():
    sys_, roots = power_system(F13, (2, 2), [1, 1])
    bad = list(roots)
    bad[0] = (F13.of(2), F13.of(3))
    with pytest.raises(InputError):
        vandermonde_verify(sys_, bad, m0_set((2, 2)))


def test_factorization_applicability():
    sys_, _ = power_system(F13, (2, 3), [1, 1])
    lf = sys_.leading_forms()
    rep = factorize_delta(lf, m0_set((2, 3)))
    assert rep.applicable
    assert [t for t, _ in rep.factors] == [2, 3]
    # a basis set whose degree profile deviates from h is not factorable
    skew = MonomialSet([(0, 0), (1, 0), (0, 1), (1, 1), (0, 2), (0, 4)])
    rep2 = factorize_delta(lf, skew)
    assert not rep2.applicable


def test_multiplication_by_one_is_identity():
    sys_, _ = power_system(F13, (2, 2), [1, 1])
    M = m0_set((2, 2))
    mm = multiplication_matrix(sys_, M, MultiPoly.constant(F13, 2, 1))
    assert mm.matrix == Matrix.identity(F13, 4)
    assert mm.kernel_dim == 0


def test_multiplication_matrix_eigen_structure():
    """g = x1 on the (2,2) grid: eigenvalues are the x1-coordinates of the
    four roots, so det(B) = (+1)(+1)(-1)(-1) = 1 and trace = 0."""
    sys_, roots = power_system(F13, (2, 2), [1, 1])
    M = m0_set((2, 2))
    mm = multiplication_matrix(sys_, M, MultiPoly.variable(F13, 2, 0))
    assert mm.det() == F13.one
    tr = sum((mm.matrix[i, i] for i in range(4)), F13.zero)
    assert tr == F13.zero
    assert mm.kernel_dim == 0


def test_multiplication_matrix_charpoly_via_roots():
    """det(B - g(root) I) = 0 for every root: g evaluated at the variety
    gives exactly the eigenvalues of the multiplication map."""
    rng = random.Random(3)
    sys_, roots = power_system(F13, (2, 2), [3, 5])
    M = m0_set((2, 2))
    g = MultiPoly(
        F13, 2, {m: F13.of(rng.randrange(13)) for m in monomials_of_degree(2, 1)}
    )
    mm = multiplication_matrix(sys_, M, g)
    for pt in roots:
        lam = g.evaluate(pt)
        shifted = Matrix(
            F13,
            [
                [mm.matrix[i, j] - (lam if i == j else F13.zero) for j in range(4)]
                for i in range(4)
            ],
        )
        assert shifted.det() == F13.zero


def test_multiplication_needs_certified_basis():
    f1 = qpoly({(2, 0): 1, (0, 0): -1}, 2)
    f2 = qpoly({(0, 2): 1, (0, 0): -1}, 2)
    sys_ = PolySystem([f1, f2], (2, 2))
    M = MonomialSet([(0, 0), (1, 0), (2, 0), (3, 0)])
    with pytest.raises(InputError):
        multiplication_matrix(sys_, M, MultiPoly.variable(QQ, 2, 0))


def test_upsilon_matches_roots_on_transformed_grid():
    rng = random.Random(44)
    for d1, d2, p in [(2, 3, 13), (2, 4, 17)]:
        F = GF(p)
        sys0, roots0 = power_system(
            F, (d1, d2), [rng.randrange(1, p), rng.randrange(1, p)]
        )
        while True:
            L = Matrix(F, [[F.of(rng.randrange(p)) for _ in range(2)] for _ in range(2)])
            if L.det():
                break
        sysL = linear_transform(sys0, L)
        rootsL = transform_roots(roots0, L)
        M1 = m1_set(d1, d2)
        grid = [[MultiPoly.monomial(F, m).evaluate(pt) for m in M1] for pt in rootsL]
        det = Matrix(F, grid, ncols=len(M1)).det()
        jac = sysL.jacobian()
        J = F.one
        for pt in rootsL:
            J = J * jac.evaluate(pt)
        ups = upsilon_bivariate(sysL.polys[0], sysL.polys[1], d1, d2)
        assert ups == det * det / J


def test_rank_oracle_matches_certificate_on_random_f101_systems():
    rng = random.Random(10)
    M = m0_set((2, 2))
    for _ in range(15):
        sys_ = random_system(rng, F101, (2, 2))
        cert = certify_basis(sys_, M)
        assert cert.is_basis == rank_oracle(sys_, M)
