"""Builders for cospectral pairs and families assembled from a seed matrix B.

Vertex order follows the block layout top-to-bottom; padding blocks
(isolated vertices or complete-graph summands) are appended last.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from typing import Optional

from .errors import (
    CospectraError,
    DegenerateSeed,
    EFSumViolation,
    NotADivisor,
    SeedValidationError,
    ShapeViolation,
)
from .exact_matrix import IntMatrix, Zero, block_assemble, direct_sum
from .graph_model import (
    DEFAULT_ISO_BOUND,
    Graph,
    from_adjacency,
    is_isomorphic,
    refinement_certificate,
)

ADJACENCY = "adjacency"
NORMALIZED = "normalized"


@dataclass(frozen=True)
class SeedInputs:
    B: IntMatrix
    n: Optional[int] = None
    k: Optional[int] = None
    G: Optional[IntMatrix] = None
    Gprime: Optional[IntMatrix] = None
    E: Optional[IntMatrix] = None
    F: Optional[IntMatrix] = None

    @property
    def p(self) -> int:
        return self.B.rows

    @property
    def q(self) -> int:
        return self.B.cols

    def to_dict(self) -> dict:
        out: dict = {"p": self.p, "q": self.q, "B": self.B.tolist()}
        for name in ("n", "k"):
            if getattr(self, name) is not None:
                out[name] = getattr(self, name)
        for name in ("G", "Gprime", "E", "F"):
            m = getattr(self, name)
            if m is not None:
                out[name] = m.tolist()
        return out


@dataclass(frozen=True)
class CospectralPair:
    left: Graph
    right: Graph
    construction: str
    params: SeedInputs
    claims: frozenset[str]
    degenerate: Optional[bool] = None

    @property
    def order(self) -> int:
        return self.left.order


@dataclass(frozen=True)
class CospectralFamily:
    members: tuple[Graph, ...]
    divisors: tuple[int, ...]
    params: SeedInputs
    construction: str = "Fk"
    claims: frozenset[str] = field(default_factory=lambda: frozenset({ADJACENCY, NORMALIZED}))

    @property
    def order(self) -> int:
        return self.members[0].order


# validation ----------------------------------------------------------------


def _check_binary(m: IntMatrix, name: str) -> None:
    for idx, a in enumerate(m.entries):
        if a not in (0, 1):
            raise SeedValidationError(f"{name}: entry {divmod(idx, m.cols)} is {a}, expected 0 or 1")


def _check_seed(B: IntMatrix, allow_zero_lines: bool) -> None:
    if B.rows == 0 or B.cols == 0:
        raise ShapeViolation(f"B must be nonempty, got {B.rows}x{B.cols}")
    _check_binary(B, "B")
    if not any(B.entries):
        warnings.warn("seed matrix B is all zero; both graphs are edgeless", DegenerateSeed, stacklevel=3)
        return
    if allow_zero_lines:
        return
    for i, s in enumerate(B.row_sums()):
        if s == 0:
            raise SeedValidationError(f"B: row {i} is all zero (pass allow_zero_lines=True to permit)")
    for j, s in enumerate(B.col_sums()):
        if s == 0:
            raise SeedValidationError(f"B: column {j} is all zero (pass allow_zero_lines=True to permit)")


def _require_tall(B: IntMatrix) -> None:
    if B.rows < B.cols:
        raise ShapeViolation(f"construction needs p >= q, got B of shape {B.rows}x{B.cols}")


def _require_n(n: int) -> None:
    if not isinstance(n, int) or n < 1:
        raise ShapeViolation(f"n must be a positive integer, got {n!r}")


def _check_graph_block(m: IntMatrix, size: int, name: str) -> None:
    if m.shape != (size, size):
        raise ShapeViolation(f"{name} must be {size}x{size}, got {m.rows}x{m.cols}")
    try:
        from_adjacency(m)
    except CospectraError as exc:
        raise SeedValidationError(f"{name}: {exc}") from exc


def _check_symmetric_binary(m: IntMatrix, size: int, name: str) -> None:
    if m.shape != (size, size):
        raise ShapeViolation(f"{name} must be {size}x{size}, got {m.rows}x{m.cols}")
    _check_binary(m, name)
    if not m.is_symmetric():
        raise SeedValidationError(f"{name} must be symmetric")


def _graph(m: IntMatrix) -> Graph:
    return from_adjacency(m)


def _flag_degenerate(left: Graph, right: Graph, iso_bound: int) -> Optional[bool]:
    """True if the two sides are isomorphic; None when undecided above the bound."""
    if left.adjacency == right.adjacency:
        return True
    if refinement_certificate(left, right) is not None:
        return False
    if left.order > iso_bound:
        return None
    return is_isomorphic(left, right, bound=iso_bound).holds


def divisors(n: int) -> list[int]:
    _require_n(n)
    return [d for d in range(1, n + 1) if n % d == 0]


# building blocks -------------------------------------------------------------


def base_bipartite(B: IntMatrix) -> IntMatrix:
    """[[0, B], [B^T, 0]] of order p + q."""
    p, q = B.shape
    return block_assemble([[Zero(p, p), B], [B.T, Zero(q, q)]])


def _star_blocks(hub: IntMatrix, copies: int) -> IntMatrix:
    """[[0, X, ..., X], [X^T, 0, ..., 0], ...] with `copies` copies of X = hub."""
    a, b = hub.shape
    top = [Zero(a, a)] + [hub] * copies
    rest = [[hub.T] + [Zero(b, b)] * copies for _ in range(copies)]
    return block_assemble([top] + rest)


def construction_I_blocks(B: IntMatrix, n: int) -> tuple[IntMatrix, IntMatrix]:
    """(C, D): C has n copies of B along its first block row, D n copies of B^T."""
    return _star_blocks(B, n), _star_blocks(B.T, n)


def Fk_matrix(B: IntMatrix, n: int, k: int) -> IntMatrix:
    """Unpadded F_k of order k*q + (n/k)*p.

    Block 0 and blocks k+1 .. k+n/k-1 have size p; blocks 1..k have size q.
    Every p-block is joined to every q-block through B, so B appears n times.
    """
    p, q = B.shape
    if k < 1 or n % k:
        raise NotADivisor(f"k={k} does not divide n={n}")
    kinds = ["p"] + ["q"] * k + ["p"] * (n // k - 1)

    def cell(r: str, c: str):
        if r == c:
            return Zero(p, p) if r == "p" else Zero(q, q)
        return B if r == "p" else B.T

    return block_assemble([[cell(r, c) for c in kinds] for r in kinds])


def construction_III_blocks(B: IntMatrix, n: int) -> tuple[IntMatrix, IntMatrix]:
    """(C, D) with identity blocks joining the n copies pairwise."""

    def build(hub: IntMatrix) -> IntMatrix:
        a, b = hub.shape
        eye = IntMatrix.identity(b)
        top = [Zero(a, a)] + [hub] * n
        rest = [[hub.T] + [Zero(b, b) if i == j else eye for j in range(n)] for i in range(n)]
        return block_assemble([top] + rest)

    return build(B), build(B.T)


def _three_block(corner: IntMatrix, B: IntMatrix, d1: IntMatrix | Zero, off: IntMatrix | Zero,
                 d2: IntMatrix | Zero) -> IntMatrix:
    """[[corner, B, B], [B^T, d1, off], [B^T, off^T, d2]]."""
    off_t = off.T if isinstance(off, IntMatrix) else Zero(off.cols, off.rows)
    return block_assemble([[corner, B, B], [B.T, d1, off], [B.T, off_t, d2]])


def _swap_block(G: IntMatrix) -> IntMatrix:
    """[[0, G], [G, 0]]."""
    s = G.rows
    return block_assemble([[Zero(s, s), G], [G, Zero(s, s)]])


# constructions -------------------------------------------------------------


def construct_I(B: IntMatrix, n: int, *, allow_zero_lines: bool = False,
                iso_bound: int = DEFAULT_ISO_BOUND) -> CospectralPair:
    """C + 0_{(n-1)(p-q)} versus D; cospectral for adjacency and normalized Laplacian."""
    _check_seed(B, allow_zero_lines)
    _require_tall(B)
    _require_n(n)
    if n < 2:
        raise ShapeViolation("construction I needs n >= 2")
    p, q = B.shape
    C, D = construction_I_blocks(B, n)
    left = _graph(direct_sum(C, IntMatrix.zeros((n - 1) * (p - q))))
    right = _graph(D)
    return CospectralPair(left, right, "I", SeedInputs(B, n=n), frozenset({ADJACENCY, NORMALIZED}),
                          _flag_degenerate(left, right, iso_bound))


def Fk_padding(p: int, q: int, n: int, k: int) -> int:
    return (n - n // k) * p + (1 - k) * q


def _padded_Fk(B: IntMatrix, n: int, k: int) -> Graph:
    p, q = B.shape
    return _graph(direct_sum(Fk_matrix(B, n, k), IntMatrix.zeros(Fk_padding(p, q, n, k))))


def construct_Fk(B: IntMatrix, n: int, k: int, *, allow_zero_lines: bool = False) -> Graph:
    """F_k padded with isolated vertices to order n*p + q."""
    _check_seed(B, allow_zero_lines)
    _require_tall(B)
    _require_n(n)
    return _padded_Fk(B, n, k)


def construct_family(B: IntMatrix, n: int, *, allow_zero_lines: bool = False) -> CospectralFamily:
    """One padded F_k per divisor k of n, in increasing k."""
    _check_seed(B, allow_zero_lines)
    _require_tall(B)
    ks = divisors(n)
    members = tuple(_padded_Fk(B, n, k) for k in ks)
    return CospectralFamily(members, tuple(ks), SeedInputs(B, n=n))


def construction_II_blocks(B: IntMatrix, G: IntMatrix, Gprime: IntMatrix) -> tuple[IntMatrix, IntMatrix]:
    p, q = B.shape
    A = _three_block(Gprime, B, Zero(q, q), G, Zero(q, q))
    C = _three_block(G, B.T, Zero(p, p), Gprime, Zero(p, p))
    return A, C


def construct_II(B: IntMatrix, G: IntMatrix, Gprime: IntMatrix, *, allow_zero_lines: bool = False,
                 iso_bound: int = DEFAULT_ISO_BOUND) -> CospectralPair:
    """A + [[0,G'],[G',0]] + G versus C + [[0,G],[G,0]] + G' (adjacency only)."""
    _check_seed(B, allow_zero_lines)
    p, q = B.shape
    _check_graph_block(G, q, "G")
    _check_graph_block(Gprime, p, "Gprime")
    A, C = construction_II_blocks(B, G, Gprime)
    left = _graph(direct_sum(A, _swap_block(Gprime), G))
    right = _graph(direct_sum(C, _swap_block(G), Gprime))
    return CospectralPair(left, right, "II", SeedInputs(B, G=G, Gprime=Gprime), frozenset({ADJACENCY}),
                          _flag_degenerate(left, right, iso_bound))


def construct_III(B: IntMatrix, n: int, *, allow_zero_lines: bool = False,
                  iso_bound: int = DEFAULT_ISO_BOUND) -> CospectralPair:
    """D + 0_{p-q} versus C + (p-q) copies of K_n (adjacency only)."""
    _check_seed(B, allow_zero_lines)
    _require_tall(B)
    _require_n(n)
    if n < 2:
        raise ShapeViolation("construction III needs n >= 2")
    p, q = B.shape
    C, D = construction_III_blocks(B, n)
    left = _graph(direct_sum(D, IntMatrix.zeros(p - q)))
    right = _graph(direct_sum(C, *[IntMatrix.complete(n)] * (p - q)))
    return CospectralPair(left, right, "III", SeedInputs(B, n=n), frozenset({ADJACENCY}),
                          _flag_degenerate(left, right, iso_bound))


def construction_IV_blocks(B: IntMatrix, G: IntMatrix, Gprime: IntMatrix) -> tuple[IntMatrix, IntMatrix]:
    q = B.cols
    A = _three_block(Gprime, B, Zero(q, q), G, Zero(q, q))
    C = _three_block(Gprime, B, G, Zero(q, q), G)
    return A, C


def construct_IV(B: IntMatrix, G: IntMatrix, Gprime: IntMatrix, *, allow_zero_lines: bool = False,
                 iso_bound: int = DEFAULT_ISO_BOUND) -> CospectralPair:
    """A + diag(G, G) versus C + [[0,G],[G,0]] (adjacency only)."""
    _check_seed(B, allow_zero_lines)
    p, q = B.shape
    _check_graph_block(G, q, "G")
    _check_graph_block(Gprime, p, "Gprime")
    A, C = construction_IV_blocks(B, G, Gprime)
    left = _graph(direct_sum(A, G, G))
    right = _graph(direct_sum(C, _swap_block(G)))
    return CospectralPair(left, right, "IV", SeedInputs(B, G=G, Gprime=Gprime), frozenset({ADJACENCY}),
                          _flag_degenerate(left, right, iso_bound))


def construct_IV_general(B: IntMatrix, Gprime: IntMatrix, E: IntMatrix, F: IntMatrix,
                         G: IntMatrix | None = None, *, allow_zero_lines: bool = False,
                         iso_bound: int = DEFAULT_ISO_BOUND) -> CospectralPair:
    """A + [[E,F],[F,E]] versus D + [[0,G],[G,0]] where G = E + F (adjacency only).

    E must have zero diagonal; F may carry diagonal ones, which become edges
    between the two copies.
    """
    _check_seed(B, allow_zero_lines)
    p, q = B.shape
    _check_graph_block(Gprime, p, "Gprime")
    _check_symmetric_binary(E, q, "E")
    _check_symmetric_binary(F, q, "F")
    for i in range(q):
        if E[i, i]:
            raise SeedValidationError(f"E: nonzero diagonal entry at {(i, i)}")
    total = E + F
    if G is not None and G != total:
        raise EFSumViolation("E + F differs from the supplied G")
    for idx, a in enumerate(total.entries):
        if a > 1:
            raise EFSumViolation(f"E + F has entry {a} at {divmod(idx, q)}")
    G = total
    A = _three_block(Gprime, B, Zero(q, q), G, Zero(q, q))
    D = _three_block(Gprime, B, E, F, E)
    left = _graph(direct_sum(A, block_assemble([[E, F], [F, E]])))
    right = _graph(direct_sum(D, _swap_block(G)))
    return CospectralPair(left, right, "IVg", SeedInputs(B, G=G, Gprime=Gprime, E=E, F=F),
                          frozenset({ADJACENCY}), _flag_degenerate(left, right, iso_bound))
