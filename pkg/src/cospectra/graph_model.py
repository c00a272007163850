"""Validated simple graphs, degree data and exact isomorphism testing."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import (
    NonBinaryEntry,
    NonzeroDiagonal,
    NotSquare,
    NotSymmetric,
    OrderTooLarge,
)
from .exact_matrix import IntMatrix
from .verdict import Verdict

DEFAULT_ISO_BOUND = 12


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph backed by a validated 0/1 adjacency matrix.

    Build instances through :func:`from_adjacency` or :func:`from_edges`;
    the constructor itself trusts its input.
    """

    adjacency: IntMatrix
    neighbors: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        n = self.adjacency.rows
        nbrs = tuple(
            tuple(j for j, a in enumerate(self.adjacency.row(i)) if a) for i in range(n)
        )
        object.__setattr__(self, "neighbors", nbrs)

    @property
    def order(self) -> int:
        return self.adjacency.rows

    def degrees(self) -> list[int]:
        return [len(nb) for nb in self.neighbors]

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(self.order) for j in self.neighbors[i] if i < j]

    def has_edge(self, i: int, j: int) -> bool:
        return self.adjacency[i, j] == 1

    def relabeled(self, perm: Sequence[int]) -> Graph:
        """Graph whose vertex k is this graph's vertex perm[k]."""
        return Graph(self.adjacency.permuted(perm))

    def __repr__(self) -> str:
        return f"Graph(order={self.order}, edges={len(self.edges())})"


def from_adjacency(m: IntMatrix) -> Graph:
    """Validate m as a simple-graph adjacency matrix.

    Entries are scanned row-major; the first violation found is reported
    with its index.
    """
    if not m.is_square():
        raise NotSquare(f"adjacency matrix must be square, got {m.rows}x{m.cols}")
    n = m.rows
    for i in range(n):
        for j in range(n):
            a = m[i, j]
            if a not in (0, 1):
                raise NonBinaryEntry((i, j), f"value {a}")
            if i == j and a:
                raise NonzeroDiagonal((i, j))
            if a != m[j, i]:
                raise NotSymmetric((i, j), f"{a} != {m[j, i]}")
    return Graph(m)


def from_edges(order: int, edges: Iterable[tuple[int, int]]) -> Graph:
    rows = [[0] * order for _ in range(order)]
    for u, v in edges:
        rows[u][v] = rows[v][u] = 1
    return from_adjacency(IntMatrix.from_rows(rows, cols=order))


def empty_graph(order: int) -> Graph:
    return Graph(IntMatrix.zeros(order))


@dataclass(frozen=True)
class DegreeSummary:
    degrees: tuple[int, ...]
    isolated: int
    max_degree: int


def degree_data(g: Graph) -> DegreeSummary:
    degs = tuple(sorted(g.degrees()))
    return DegreeSummary(
        degrees=degs,
        isolated=sum(1 for d in degs if d == 0),
        max_degree=max(degs, default=0),
    )


def connected_components(g: Graph) -> list[list[int]]:
    """Vertex sets of the connected components (union-find), ordered by least vertex."""
    parent = list(range(g.order))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in g.edges():
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[max(ru, rv)] = min(ru, rv)
    groups: dict[int, list[int]] = {}
    for v in range(g.order):
        groups.setdefault(find(v), []).append(v)
    return [groups[r] for r in sorted(groups)]


# isomorphism -------------------------------------------------------------


def _refine(g: Graph, h: Graph, cg: list[int], ch: list[int]):
    """Joint colour refinement of two graphs until the partition is stable.

    Colours are relabelled from a shared palette so that classes of g and h
    stay comparable. Returns (cg, ch, rounds, mismatch) where mismatch is the
    first round whose class histograms differ, or None.
    """
    rounds = 0
    n_colors = len(set(cg) | set(ch))
    while True:
        if Counter(cg) != Counter(ch):
            return cg, ch, rounds, rounds
        sg = [(cg[v], tuple(sorted(cg[u] for u in g.neighbors[v]))) for v in range(g.order)]
        sh = [(ch[v], tuple(sorted(ch[u] for u in h.neighbors[v]))) for v in range(h.order)]
        palette = {s: i for i, s in enumerate(sorted(set(sg) | set(sh)))}
        new_g = [palette[s] for s in sg]
        new_h = [palette[s] for s in sh]
        rounds += 1
        if len(palette) == n_colors:
            if Counter(new_g) != Counter(new_h):
                return new_g, new_h, rounds, rounds
            return new_g, new_h, rounds, None
        cg, ch, n_colors = new_g, new_h, len(palette)


def _histogram(colors: list[int]) -> list[list[int]]:
    return [[c, k] for c, k in sorted(Counter(colors).items())]


def refinement_certificate(g: Graph, h: Graph) -> dict | None:
    """Cheap proof of non-isomorphism, or None if refinement cannot tell them apart.

    Works at any order; used both as the search's first stage and as the
    certificate-only path above the search bound.
    """
    if g.order != h.order:
        return {"reason": "order", "orders": [g.order, h.order]}
    dg, dh = degree_data(g), degree_data(h)
    if dg.degrees != dh.degrees:
        return {
            "reason": "degree sequence",
            "left_degrees": list(dg.degrees),
            "right_degrees": list(dh.degrees),
        }
    cg, ch, _, mismatch = _refine(g, h, g.degrees(), h.degrees())
    if mismatch is not None:
        return {
            "reason": "refined partition mismatch",
            "round": mismatch,
            "left_classes": _histogram(cg),
            "right_classes": _histogram(ch),
        }
    return None


def is_isomorphic(g: Graph, h: Graph, bound: int = DEFAULT_ISO_BOUND) -> Verdict:
    """Exact isomorphism test by individualisation-refinement backtracking.

    Returns a witness permutation ``perm`` (g's vertex v maps to h's vertex
    perm[v]) when isomorphic, otherwise the distinguishing certificate.
    """
    cert = refinement_certificate(g, h)
    if cert is not None:
        return Verdict("isomorphic", False, cert)
    if g.order > bound:
        raise OrderTooLarge(f"order {g.order} exceeds the exact-search bound {bound}")
    stats = {"nodes": 0}
    perm = _search(g, h, g.degrees(), h.degrees(), stats)
    if perm is None:
        return Verdict("isomorphic", False, {"reason": "search exhausted", "nodes": stats["nodes"]})
    return Verdict("isomorphic", True, {"perm": perm, "nodes": stats["nodes"]})


def _search(g: Graph, h: Graph, cg: list[int], ch: list[int], stats: dict) -> list[int] | None:
    stats["nodes"] += 1
    cg, ch, _, mismatch = _refine(g, h, cg, ch)
    if mismatch is not None:
        return None
    sizes = Counter(cg)
    cells = [c for c, k in sizes.items() if k > 1]
    if not cells:
        where = {c: w for w, c in enumerate(ch)}
        perm = [where[c] for c in cg]
        ok = all(h.has_edge(perm[u], perm[v]) for u, v in g.edges())
        return perm if ok else None
    target = min(cells, key=lambda c: (sizes[c], c))
    v = min(i for i, c in enumerate(cg) if c == target)
    fresh = max(max(cg), max(ch)) + 1
    for w in (i for i, c in enumerate(ch) if c == target):
        ng, nh = list(cg), list(ch)
        ng[v] = nh[w] = fresh
        found = _search(g, h, ng, nh, stats)
        if found is not None:
            return found
    return None


def is_valid_isomorphism(g: Graph, h: Graph, perm: Sequence[int]) -> bool:
    if g.order != h.order or sorted(perm) != list(range(g.order)):
        return False
    return all(
        g.adjacency[u, v] == h.adjacency[perm[u], perm[v]]
        for u in range(g.order) for v in range(g.order)
    )
