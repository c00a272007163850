"""Shared generators and oracles for the test suite."""

from __future__ import annotations

import itertools
import random
import warnings

import networkx as nx
import numpy as np

from cospectra import constructions as cons
from cospectra.errors import DegenerateSeed
from cospectra.exact_matrix import IntMatrix, poly_det
from cospectra.graph_model import Graph, from_adjacency
from cospectra.polynomial import IntPoly
from cospectra.reference_examples import EXAMPLES, build_sides


def random_binary(rng: random.Random, rows: int, cols: int) -> IntMatrix:
    return IntMatrix.from_rows([[rng.randint(0, 1) for _ in range(cols)] for _ in range(rows)], cols=cols)


def random_graph_matrix(rng: random.Random, n: int, density: float = 0.5) -> IntMatrix:
    rows = [[0] * n for _ in range(n)]
    for i, j in itertools.combinations(range(n), 2):
        if rng.random() < density:
            rows[i][j] = rows[j][i] = 1
    return IntMatrix.from_rows(rows, cols=n)


def split_graph(rng: random.Random, G: IntMatrix) -> tuple[IntMatrix, IntMatrix]:
    """Random E, F with E + F = G, each edge going to exactly one of them."""
    q = G.rows
    e = [[0] * q for _ in range(q)]
    f = [[0] * q for _ in range(q)]
    for i, j in itertools.combinations(range(q), 2):
        if G[i, j]:
            target = e if rng.random() < 0.5 else f
            target[i][j] = target[j][i] = 1
    return IntMatrix.from_rows(e, cols=q), IntMatrix.from_rows(f, cols=q)


def random_seed(rng: random.Random, max_dim: int = 5, n_range=(2, 4)) -> tuple[IntMatrix, int]:
    q = rng.randint(1, max_dim)
    p = rng.randint(q, max_dim)
    return random_binary(rng, p, q), rng.randint(*n_range)


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.order))
    h.add_edges_from(g.edges())
    return h


def from_nx(h: nx.Graph) -> Graph:
    return from_adjacency(IntMatrix.from_rows(nx.to_numpy_array(h, nodelist=sorted(h), dtype=int).tolist()))


def numpy_eigs(m: IntMatrix) -> list[float]:
    return sorted(np.linalg.eigvalsh(m.to_numpy()).tolist())


def multiset_close(a, b, tol: float) -> bool:
    a, b = sorted(a), sorted(b)
    return len(a) == len(b) and all(abs(x - y) <= tol for x, y in zip(a, b))


def example_corpus() -> list[Graph]:
    out = []
    for ex in EXAMPLES:
        out.extend(build_sides(ex).values())
    return out


def random_corpus(count: int, seed: int = 11) -> list[Graph]:
    """Outputs of every construction for `count` random seeds."""
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", DegenerateSeed)
        return _random_corpus(count, seed)


def _random_corpus(count: int, seed: int) -> list[Graph]:
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        B, n = random_seed(rng, max_dim=3)
        p, q = B.shape
        G = random_graph_matrix(rng, q)
        Gp = random_graph_matrix(rng, p)
        E, F = split_graph(rng, G)
        opts = dict(allow_zero_lines=True, iso_bound=0)
        for pair in (
            cons.construct_I(B, n, **opts),
            cons.construct_III(B, n, **opts),
            cons.construct_II(B, G, Gp, **opts),
            cons.construct_IV(B, G, Gp, **opts),
            cons.construct_IV_general(B, Gp, E, F, **opts),
        ):
            out += [pair.left, pair.right]
        out += list(cons.construct_family(B, n, allow_zero_lines=True).members)
    return out


def schur_core(B: IntMatrix, n: int) -> IntPoly:
    """det(x(x - n + 1) I - n B^T B), built entry by entry over Z[x]."""
    btb = B.T @ B
    q = btb.rows
    quad = IntPoly((0, -(n - 1), 1))
    entries = [
        [(quad if i == j else IntPoly()) - IntPoly.constant(n * btb[i, j]) for j in range(q)]
        for i in range(q)
    ]
    return poly_det(entries)


def even_core(p) -> tuple[int, IntPoly]:
    """(m, g) with p = x^m * g(x^2) and g(0) != 0; p must be the char poly of a bipartite graph."""
    m, rest = p.deflate_zero()
    g = rest.even_part_in_square()
    assert g is not None, "bipartite characteristic polynomial must be even after deflation"
    return m, g


# criterion number -> one-line pass/fail summary, filled by test_acceptance
ACCEPTANCE: dict[int, str] = {}
