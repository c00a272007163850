import itertools
import random

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from cospectra.constructions import Fk_matrix, construction_III_blocks
from cospectra.errors import NotSquare, OrderMismatch, ShapeMismatch
from cospectra.exact_matrix import (
    BlockGrid,
    IntMatrix,
    Zero,
    block_assemble,
    char_poly,
    determinant,
    direct_sum,
    gen_char_poly,
    poly_det,
)
from cospectra.polynomial import IntPoly, real_roots, root_multiplicity

from helpers import multiset_close, numpy_eigs


def int_matrices(max_n=5, lo=-4, hi=4):
    return st.integers(0, max_n).flatmap(
        lambda n: st.lists(st.integers(lo, hi), min_size=n * n, max_size=n * n).map(
            lambda xs: IntMatrix(n, n, tuple(xs))
        )
    )


def sym_matrices(max_n=8, lo=-3, hi=3):
    def build(n, xs):
        rows = [[0] * n for _ in range(n)]
        it = iter(xs)
        for i in range(n):
            for j in range(i, n):
                rows[i][j] = rows[j][i] = next(it)
        return IntMatrix.from_rows(rows, cols=n)

    return st.integers(1, max_n).flatmap(
        lambda n: st.lists(st.integers(lo, hi), min_size=n * (n + 1) // 2, max_size=n * (n + 1) // 2).map(
            lambda xs: build(n, xs)
        )
    )


def leibniz_det(rows):
    n = len(rows)
    total = 0
    for perm in itertools.permutations(range(n)):
        inv = sum(1 for i, j in itertools.combinations(range(n), 2) if perm[i] > perm[j])
        term = (-1) ** inv
        for i in range(n):
            term = term * rows[i][perm[i]]
        total = total + term
    return total


def test_constructors():
    assert IntMatrix.identity(2).tolist() == [[1, 0], [0, 1]]
    assert IntMatrix.complete(3).tolist() == [[0, 1, 1], [1, 0, 1], [1, 1, 0]]
    assert IntMatrix.zeros(2, 3).shape == (2, 3)
    with pytest.raises(ShapeMismatch):
        IntMatrix(2, 2, (1, 2, 3))
    with pytest.raises(ShapeMismatch):
        IntMatrix.from_rows([[1, 2], [3]])
    with pytest.raises(NotSquare):
        IntMatrix.zeros(2, 3).order


def test_matrix_arithmetic():
    a = IntMatrix.from_rows([[1, 2], [3, 4]])
    assert (a @ IntMatrix.identity(2)) == a
    assert a.T.tolist() == [[1, 3], [2, 4]]
    assert (a + a).tolist() == a.scale(2).tolist()
    assert (a - a) == IntMatrix.zeros(2)
    assert not a.is_symmetric() and (a + a.T).is_symmetric()
    assert a.permuted([1, 0]).tolist() == [[4, 3], [2, 1]]


def test_direct_sum_examples():
    m = IntMatrix.from_rows([[0, 1], [1, 0]])
    assert direct_sum(IntMatrix.zeros(0), m) == m
    assert direct_sum(IntMatrix.from_rows([[1]]), IntMatrix.from_rows([[2]])).tolist() == [[1, 0], [0, 2]]
    assert direct_sum().shape == (0, 0)


def test_direct_sum_order_of_construction_I_left():
    # C has order n*q + p; the padding adds (n-1)(p-q)
    p, q, n = 3, 2, 3
    C = IntMatrix.zeros(n * q + p)
    assert direct_sum(C, IntMatrix.zeros((n - 1) * (p - q))).order == n * p + q


@given(int_matrices(3), int_matrices(3), int_matrices(3))
def test_direct_sum_associative(a, b, c):
    assert direct_sum(direct_sum(a, b), c) == direct_sum(a, direct_sum(b, c))


def test_block_assemble_examples():
    m = IntMatrix.from_rows([[1, 2], [3, 4]])
    assert block_assemble([[m]]) == m
    B = IntMatrix.from_rows([[1, 1]])
    got = block_assemble(BlockGrid([[Zero(1, 1), B], [B.T, Zero(2, 2)]]))
    assert got.tolist() == [[0, 1, 1], [1, 0, 0], [1, 0, 0]]


def test_block_assemble_shape_mismatch():
    B = IntMatrix.from_rows([[1, 1]])
    with pytest.raises(ShapeMismatch):
        block_assemble([[Zero(2, 2), B], [B.T, Zero(2, 2)]])
    with pytest.raises(ShapeMismatch):
        block_assemble([[Zero(1, 1), B], [B.T]])


def test_F2_layout_order():
    B = IntMatrix.from_rows([[1, 0], [1, 1], [1, 1]])
    assert Fk_matrix(B, 4, 2).order == 2 * 2 + 2 * 3


def test_char_poly_examples():
    assert char_poly(IntMatrix.zeros(3)) == IntPoly.monomial(3)
    assert char_poly(IntMatrix.complete(3)) == IntPoly((-2, -3, 0, 1))
    C, _ = construction_III_blocks(IntMatrix.from_rows([[1]]), 2)
    assert C.order == 3
    assert char_poly(C) == IntPoly.from_roots([2, -1, -1])
    assert multiset_close(numpy_eigs(C), [2, -1, -1], 1e-12)
    assert char_poly(IntMatrix.zeros(0)) == IntPoly.constant(1)
    with pytest.raises(NotSquare):
        char_poly(IntMatrix.zeros(2, 3))


def test_gen_char_poly_examples():
    A = IntMatrix.from_rows([[0, 1], [1, 0]])
    D = IntMatrix.identity(2)
    # det(x D - (D - A)) = (x - 1)^2 - 1 = x (x - 2)
    assert gen_char_poly(D - A, D) == IntPoly((0, -2, 1))
    assert gen_char_poly(IntMatrix.zeros(4), IntMatrix.identity(4)) == IntPoly.monomial(4)
    with pytest.raises(NotSquare):
        gen_char_poly(IntMatrix.zeros(2, 3), IntMatrix.identity(2))
    with pytest.raises(OrderMismatch):
        gen_char_poly(IntMatrix.zeros(2), IntMatrix.identity(3))


def test_construction_III_minus_one_reserve():
    B = IntMatrix.from_rows([[1, 1], [1, 1], [1, 1]])
    C, _ = construction_III_blocks(B, 2)
    assert root_multiplicity(char_poly(C), -1) >= (2 - 1) * 2


@given(int_matrices(5))
def test_char_poly_monic_and_constant_term(m):
    p = char_poly(m)
    assert p.degree == m.order and p.is_monic()
    assert p(0) == (-1) ** m.order * determinant(m)


@given(int_matrices(5))
def test_determinant_matches_leibniz(m):
    assert determinant(m) == leibniz_det(m.tolist())


@given(int_matrices(5))
def test_gen_char_poly_with_identity(m):
    assert gen_char_poly(m, IntMatrix.identity(m.order)) == char_poly(m)


@given(int_matrices(4), int_matrices(4))
def test_char_poly_multiplicative_on_direct_sums(a, b):
    assert char_poly(direct_sum(a, b)) == char_poly(a) * char_poly(b)


@settings(max_examples=40)
@given(int_matrices(4, -2, 2), int_matrices(4, -2, 2))
def test_pencil_det_matches_leibniz(m, w):
    if m.order != w.order:
        return
    n = m.order
    entries = [[IntPoly((-m[i, j], w[i, j])) for j in range(n)] for i in range(n)]
    assert poly_det(entries) == (leibniz_det(entries) if n else IntPoly.constant(1))


def test_poly_det_needs_row_swap():
    x = IntPoly.x()
    one, zero = IntPoly.constant(1), IntPoly()
    # zero pivot in the first column forces a swap
    entries = [[zero, x, one], [one, zero, x], [x, one, zero]]
    assert poly_det(entries) == leibniz_det(entries)
    assert poly_det([[zero, zero], [zero, x]]).is_zero()


@settings(max_examples=60)
@given(sym_matrices(8))
def test_char_poly_roots_match_numpy(m):
    assert multiset_close(real_roots(char_poly(m)), numpy_eigs(m), 1e-9)


def test_char_poly_large_entries_stay_exact():
    rng = random.Random(5)
    rows = [[rng.randint(-10 ** 6, 10 ** 6) for _ in range(6)] for _ in range(6)]
    m = IntMatrix.from_rows(rows)
    assert char_poly(m)(0) == leibniz_det(rows)
    assert np.isclose(float(char_poly(m)(0)), np.linalg.det(np.array(rows, dtype=float)), rtol=1e-6)
