import random
from itertools import permutations

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from grslice.errors import InvalidSize, SizeBudgetExceeded
from grslice.polynomial import Polynomial
from grslice.slices import (
    MatrixT,
    TPoly,
    build_generic_X,
    det_t,
    minor_degree_check,
    slice_generators,
    slice_vartable,
    t_weights,
)

from oracles import symbols_for, to_sympy


def leibniz_det(M: MatrixT) -> TPoly:
    n = M.n
    total = TPoly.constant(M.table, 0)
    for perm in permutations(range(n)):
        sign = 1
        for i in range(n):
            for j in range(i + 1, n):
                if perm[i] > perm[j]:
                    sign = -sign
        term = TPoly.constant(M.table, sign)
        for i in range(n):
            term = term * M[i, perm[i]]
        total = total + term
    return total


def test_generic_entries():
    X = build_generic_X(2, 1)
    t = X.table
    assert X[0, 0].coeffs == [Polynomial.constant(t, 1), Polynomial.var(t, "x[1][1][1]")]
    X2 = build_generic_X(2, 2)
    assert X2[0, 1].coeff(0).is_zero()
    assert X2[0, 1].coeff(1) == Polynomial.var(X2.table, "x[1][2][1]")
    assert X2[0, 1].coeff(2) == Polynomial.var(X2.table, "x[1][2][2]")
    assert len(build_generic_X(3, 2).table) == 18


def test_det_2x2():
    X = build_generic_X(2, 1)
    v = {n: Polynomial.var(X.table, n) for n in X.table.names}
    d = det_t(X)
    assert d.coeff(0) == 1
    assert d.coeff(1) == v["x[1][1][1]"] + v["x[2][2][1]"]
    assert d.coeff(2) == v["x[1][1][1]"] * v["x[2][2][1]"] - v["x[1][2][1]"] * v["x[2][1][1]"]


def test_identity_degenerate_case():
    assert det_t(build_generic_X(3, 0)).coeffs == [Polynomial.constant(slice_vartable(3, 0), 1)]


@pytest.mark.parametrize("n,k", [(2, 1), (2, 2), (3, 1), (3, 2), (4, 1)])
def test_det_matches_leibniz(n, k):
    X = build_generic_X(n, k)
    assert det_t(X) == leibniz_det(X)


def test_first_coefficient_is_trace():
    X = build_generic_X(3, 1)
    tr = sum((Polynomial.var(X.table, f"x[{i}][{i}][1]") for i in range(1, 4)), Polynomial.zero(X.table))
    assert det_t(X).coeff(1) == tr


@pytest.mark.parametrize("n", [2, 3])
def test_k1_generators_are_charpoly_coefficients(n):
    gens = slice_generators(n, 1)
    syms = symbols_for(gens[0].table)
    A = sympy.Matrix(n, n, syms)
    lam = sympy.Symbol("lam")
    # det(I + A s) = sum_r e_r(A) s^r and det(lam I + A) = sum_r e_r(A) lam^(n-r)
    cp = sympy.Poly((A * -1).charpoly(lam).as_expr(), lam)
    for r, g in enumerate(gens, start=1):
        assert sympy.expand(to_sympy(g, syms) - cp.coeff_monomial(lam ** (n - r))) == 0


def test_generator_lists():
    g = slice_generators(2, 1)
    assert [p.to_text() for p in g] == [
        "1*x[1][1][1]^1 + 1*x[2][2][1]^1",
        "-1*x[1][2][1]^1*x[2][1][1]^1 + 1*x[1][1][1]^1*x[2][2][1]^1",
    ]
    assert len(slice_generators(3, 2)) == 6
    with pytest.raises(InvalidSize):
        slice_generators(1, 1)


@pytest.mark.parametrize("n,k", [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2)])
def test_generators_are_weighted_homogeneous(n, k):
    gens = slice_generators(n, k)
    assert len(gens) == k * n
    assert len(gens[0].table) == k * n * n
    weights = t_weights(gens[0].table)
    for r, g in enumerate(gens, start=1):
        assert g.weighted_degrees(weights) == {r}


def test_minor_degree_check():
    assert minor_degree_check(2, 1, 1)
    assert minor_degree_check(3, 2, 2)
    assert minor_degree_check(3, 1, 3)
    with pytest.raises(InvalidSize):
        minor_degree_check(2, 1, 3)


def test_size_budget():
    from grslice.polynomial import VarTable

    table = VarTable(["a"])
    one = TPoly.constant(table, 1)
    M = MatrixT([[one] * 7 for _ in range(7)], table, 0)
    with pytest.raises(SizeBudgetExceeded):
        det_t(M)


def _const_matrix(rows, table):
    # rows[s] is the coefficient matrix of t^-s
    n = len(rows[0])
    return MatrixT([[TPoly(table, [Polynomial.constant(table, rows[s][i][j]) for s in range(len(rows))])
                     for j in range(n)] for i in range(n)], table, len(rows) - 1)


def _matmul_t(A: MatrixT, B: MatrixT) -> MatrixT:
    n = A.n
    entries = [[sum((A[i, l] * B[l, j] for l in range(n)), TPoly.constant(A.table, 0)) for j in range(n)] for i in range(n)]
    return MatrixT(entries, A.table, A.bound + B.bound)


@settings(max_examples=30, deadline=None)
@given(st.integers(2, 3), st.randoms(use_true_random=False))
def test_det_is_multiplicative(n, rng):
    table = slice_vartable(2, 0)
    mats = [[[[rng.randint(-3, 3) if s else int(i == j) for j in range(n)] for i in range(n)] for s in range(2)] for _ in range(2)]
    A, B = (_const_matrix(m, table) for m in mats)
    assert det_t(_matmul_t(A, B)) == det_t(A) * det_t(B)


def _random_nilpotent(n, rng):
    U = [[rng.randint(-2, 2) if j > i else 0 for j in range(n)] for i in range(n)]
    perm = list(range(n))
    rng.shuffle(perm)
    return [[U[perm[i]][perm[j]] for j in range(n)] for i in range(n)]


@pytest.mark.parametrize("n,k", [(2, 1), (2, 3), (3, 2), (4, 1), (4, 2)])
def test_unipotent_products_lie_on_the_slice(n, k):
    from grslice.certify import unipotent_product_point

    rng = random.Random(n * 10 + k)
    gens = slice_generators(n, k)
    for _ in range(5):
        point = unipotent_product_point([_random_nilpotent(n, rng) for _ in range(k)], n, k)
        assert all(g.evaluate(point) == 0 for g in gens)
