import random
import warnings

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from cospectra import constructions as cons
from cospectra.errors import NotSquare, NotSymmetric, ZeroVector
from cospectra.exact_matrix import IntMatrix, char_poly
from cospectra.graph_model import connected_components, empty_graph, from_adjacency, from_edges
from cospectra.polynomial import IntPoly, real_roots, root_multiplicity
from cospectra.reference_examples import parse_printed_spectrum
from cospectra.spectra import (
    adjacency_charpoly,
    adjacency_cospectral,
    first_difference,
    float_spectrum,
    harmonic_eigen_residual,
    jacobi_eigenvalues,
    normalized_cospectral,
    normalized_float_spectrum,
    normalized_laplacian_charpoly,
    normalized_laplacian_matrix,
)

from helpers import multiset_close, random_graph_matrix

ALL_ONES_3x2 = IntMatrix.ones(3, 2)
B_3x3 = IntMatrix.from_rows([[1, 0, 1], [1, 1, 0], [1, 1, 0]])


def random_graph(seed, n, density=0.4):
    return from_adjacency(random_graph_matrix(random.Random(seed), n, density))


# Jacobi ------------------------------------------------------------------------


def test_jacobi_small_cases():
    assert float_spectrum(IntMatrix.zeros(3)) == [0.0, 0.0, 0.0]
    assert multiset_close(float_spectrum(IntMatrix.complete(3)), [-1, -1, 2], 1e-9)
    assert jacobi_eigenvalues(np.zeros((0, 0))) == []


def test_jacobi_rejects_bad_input():
    with pytest.raises(NotSymmetric) as info:
        jacobi_eigenvalues([[0, 1], [2, 0]])
    assert info.value.index == (0, 1)
    with pytest.raises(NotSquare):
        jacobi_eigenvalues([[1, 2, 3]])
    with pytest.raises(NotSquare):
        float_spectrum(IntMatrix.zeros(2, 3))


@settings(max_examples=50)
@given(st.integers(1, 12), st.integers(0, 10 ** 6))
def test_jacobi_matches_numpy(n, seed):
    rng = np.random.default_rng(seed)
    a = rng.normal(size=(n, n))
    a = a + a.T
    assert multiset_close(jacobi_eigenvalues(a), np.linalg.eigvalsh(a), 1e-9)


def test_jacobi_tiny_pivots_do_not_overflow():
    a = np.diag([1.0, 2.0, 3.0])
    a[0, 1] = a[1, 0] = 1e-300
    a[1, 2] = a[2, 1] = 1e-200
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        got = jacobi_eigenvalues(a)
    assert got == pytest.approx([1.0, 2.0, 3.0], abs=1e-12)


# polynomials ---------------------------------------------------------------------


def test_adjacency_charpoly_examples():
    assert adjacency_charpoly(from_edges(2, [(0, 1)])) == IntPoly((-1, 0, 1))
    assert adjacency_charpoly(empty_graph(4)) == IntPoly.monomial(4)
    pair = cons.construct_III(ALL_ONES_3x2, 2)
    p = adjacency_charpoly(pair.left)
    assert p.degree == 9 and p == adjacency_charpoly(pair.right)


def test_normalized_charpoly_examples():
    assert normalized_laplacian_charpoly(empty_graph(1)).numerator == IntPoly((-1, 1))
    k2 = normalized_laplacian_charpoly(from_edges(2, [(0, 1)]))
    assert k2.numerator == IntPoly((0, -2, 1)) and k2.denominator == 1
    # a star K_{1,3}: spectrum {0, 1, 1, 2}
    star = normalized_laplacian_charpoly(from_edges(4, [(0, 1), (0, 2), (0, 3)]))
    assert star.numerator == IntPoly.from_roots([0, 1, 1, 2])


def test_normalized_charpoly_of_left_side_example():
    pair = cons.construct_III(ALL_ONES_3x2, 2)
    want = parse_printed_spectrum("{0, 0.6667, 0.6667, 1, 1, 1.3333, 1.3333, 1.3333, 1.6667}")
    assert multiset_close(real_roots(normalized_laplacian_charpoly(pair.left)), want, 5e-4)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10 ** 6), st.integers(1, 11), st.floats(0.1, 0.9))
def test_normalized_charpoly_properties(seed, n, density):
    g = random_graph(seed, n, density)
    p = normalized_laplacian_charpoly(g)
    assert p.degree == n and p.is_monic()
    roots = real_roots(p)
    assert len(roots) == n
    assert all(-1e-9 <= r <= 2 + 1e-9 for r in roots)
    assert multiset_close(roots, normalized_float_spectrum(g), 1e-8)
    assert multiset_close(roots, np.linalg.eigvalsh(normalized_laplacian_matrix(g)), 1e-8)
    # every component with an edge contributes one zero eigenvalue
    nontrivial = sum(1 for c in connected_components(g) if len(c) > 1)
    assert root_multiplicity(p, 0) == nontrivial


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10 ** 6), st.integers(2, 11))
def test_zero_adjacency_eigenvalue_forces_normalized_one(seed, n):
    g = random_graph(seed, n, 0.5)
    if 0 in g.degrees():
        return
    assert root_multiplicity(normalized_laplacian_charpoly(g), 1) >= root_multiplicity(adjacency_charpoly(g), 0)


def test_isolated_vertex_convention():
    g = from_edges(4, [(0, 1)])
    p = normalized_laplacian_charpoly(g)
    assert p.numerator == IntPoly((0, -2, 1)) * IntPoly.linear(1) ** 2


# harmonic eigenvectors -----------------------------------------------------------------


def test_harmonic_residual_examples():
    k2 = from_edges(2, [(0, 1)])
    assert harmonic_eigen_residual(k2, 0.0, [1, 1]) == 0.0
    assert harmonic_eigen_residual(k2, 2.0, [1, -1]) == 0.0
    with pytest.raises(ZeroVector):
        harmonic_eigen_residual(k2, 0.0, [0, 0])
    with pytest.raises(ValueError):
        harmonic_eigen_residual(k2, 0.0, [1, 1, 1])


@pytest.mark.parametrize("seed", range(6))
def test_harmonic_residual_from_pencil_solve(seed):
    # a spanning path guarantees no isolated vertices, so D is invertible
    edges = random_graph(seed, 10, 0.4).edges() + [(i, i + 1) for i in range(9)]
    g = from_edges(10, set(edges))
    vals, vecs = np.linalg.eigh(normalized_laplacian_matrix(g))
    d = np.array(g.degrees(), dtype=float)
    for lam, x in zip(vals, vecs.T):
        y = x / np.sqrt(d)
        assert harmonic_eigen_residual(g, lam, y) < 1e-8


# verdicts -------------------------------------------------------------------------


def test_verdict_self():
    g = random_graph(3, 7)
    assert adjacency_cospectral(g, g).holds
    assert normalized_cospectral(g, g).holds


def test_verdict_order_mismatch():
    v = adjacency_cospectral(empty_graph(2), empty_graph(3))
    assert not v.holds and v.witness["reason"] == "order"


def test_construction_III_example_verdicts():
    pair = cons.construct_III(ALL_ONES_3x2, 2)
    assert adjacency_cospectral(pair.left, pair.right).holds
    v = normalized_cospectral(pair.left, pair.right)
    assert not v.holds
    diff = v.witness["first_difference"]
    assert diff["left"] != diff["right"]
    d = v.to_dict()
    assert d["spectra"][1] == [0.0, 0.0, 0.75, 1.0, 1.0, 1.25, 1.25, 1.75, 2.0]


def test_construction_III_second_example_spectra():
    # the hub-of-degree-6 graph (D) carries the list starting 0.2324
    pair = cons.construct_III(B_3x3, 2)
    d_spec = normalized_float_spectrum(pair.left)
    c_spec = normalized_float_spectrum(pair.right)
    assert multiset_close(d_spec, [0, 0.2324, 0.6667, 1, 1.3333, 1.3333, 1.3333, 1.4343, 1.6667], 5e-4)
    assert multiset_close(c_spec, [0, 0.2034, 0.6738, 1, 1.25, 1.3333, 1.3478, 1.5, 1.6917], 5e-4)
    assert max(pair.left.degrees()) == 6


def test_construction_I_random_4x2_both_hold():
    rng = random.Random(8)
    for _ in range(5):
        B = IntMatrix.from_rows([[rng.randint(0, 1) for _ in range(2)] for _ in range(4)])
        pair = cons.construct_I(B, 3, allow_zero_lines=True, iso_bound=0)
        assert adjacency_cospectral(pair.left, pair.right).holds
        assert normalized_cospectral(pair.left, pair.right).holds


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10 ** 6), st.integers(2, 9))
def test_verdicts_symmetric_and_relabel_invariant(seed, n):
    g, h = random_graph(seed, n), random_graph(seed + 1, n)
    perm = list(range(n))
    random.Random(seed).shuffle(perm)
    for fn in (adjacency_cospectral, normalized_cospectral):
        a = fn(g, h, with_spectra=False).holds
        assert fn(h, g, with_spectra=False).holds == a
        assert fn(g.relabeled(perm), h, with_spectra=False).holds == a
        assert fn(g, g.relabeled(perm), with_spectra=False).holds


def test_first_difference():
    assert first_difference(IntPoly((1, 2)), IntPoly((1, 2))) is None
    assert first_difference(IntPoly((1, 2)), IntPoly((1, 3)))["degree"] == 1
    assert first_difference(IntPoly((1,)), IntPoly((1, 0, 5)))["degree"] == 2


def test_float_spectrum_matches_exact_roots():
    for seed in range(5):
        g = random_graph(seed, 12, 0.5)
        assert multiset_close(float_spectrum(g.adjacency), real_roots(char_poly(g.adjacency)), 1e-8)
