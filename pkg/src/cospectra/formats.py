"""graph6 and DOT interchange for :class:`Graph`."""

from __future__ import annotations

from typing import Sequence

from .errors import LabelCountMismatch, MalformedGraph6, MalformedSeed
from .exact_matrix import IntMatrix
from .graph_model import Graph

GRAPH6_HEADER = ">>graph6<<"


def _encode_size(n: int) -> str:
    if n < 63:
        return chr(63 + n)
    if n < 258048:
        return "~" + "".join(chr(63 + ((n >> s) & 63)) for s in (12, 6, 0))
    if n < 1 << 36:
        return "~~" + "".join(chr(63 + ((n >> s) & 63)) for s in (30, 24, 18, 12, 6, 0))
    raise ValueError(f"graph6 cannot encode order {n}")


def export_graph6(g: Graph) -> str:
    """graph6 text without header or trailing newline."""
    n = g.order
    bits = [g.adjacency[i, j] for j in range(1, n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    body = "".join(
        chr(63 + int("".join(map(str, bits[k:k + 6])), 2)) for k in range(0, len(bits), 6)
    )
    return _encode_size(n) + body


def _decode_size(data: bytes) -> tuple[int, int]:
    if not data:
        raise MalformedGraph6("empty graph6 string")
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise MalformedGraph6("truncated 8-byte size header")
        chunk, offset = data[2:8], 8
    else:
        if len(data) < 4:
            raise MalformedGraph6("truncated 4-byte size header")
        chunk, offset = data[1:4], 4
    n = 0
    for b in chunk:
        n = (n << 6) | (b - 63)
    return n, offset


def import_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER):]
    try:
        data = s.encode("ascii")
    except UnicodeEncodeError as exc:
        raise MalformedGraph6("non-ASCII character in graph6 text") from exc
    if any(b < 63 or b > 126 for b in data):
        raise MalformedGraph6("graph6 characters must lie in 63..126")
    n, offset = _decode_size(data)
    body = data[offset:]
    nbits = n * (n - 1) // 2
    need = -(-nbits // 6)
    if len(body) != need:
        raise MalformedGraph6(f"order {n} needs {need} data bytes, got {len(body)}")
    bits = []
    for b in body:
        v = b - 63
        bits.extend((v >> s) & 1 for s in range(5, -1, -1))
    if any(bits[nbits:]):
        raise MalformedGraph6("nonzero padding bits")
    rows = [[0] * n for _ in range(n)]
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                rows[i][j] = rows[j][i] = 1
            k += 1
    return Graph(IntMatrix.from_rows(rows, cols=n))


def export_dot(g: Graph, labels: Sequence[str] | None = None, name: str = "G") -> str:
    """Deterministic DOT text: vertices in index order, edges i < j lexicographically."""
    if labels is not None and len(labels) != g.order:
        raise LabelCountMismatch(f"{len(labels)} labels for {g.order} vertices")
    lines = [f"graph {name} {{"]
    for v in range(g.order):
        if labels is None:
            lines.append(f"  {v};")
        else:
            lab = str(labels[v]).replace("\\", "\\\\").replace('"', '\\"')
            lines.append(f'  {v} [label="{lab}"];')
    for i, j in g.edges():
        lines.append(f"  {i} -- {j};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def parse_seed(text: str) -> IntMatrix:
    """Inline 0/1 matrix: rows separated by ';', whitespace ignored ("10;11;11")."""
    compact = "".join(text.split())
    if not compact:
        raise MalformedSeed("empty matrix text")
    rows = compact.split(";")
    for i, r in enumerate(rows):
        if not r:
            raise MalformedSeed(f"row {i} is empty")
        bad = next((c for c in r if c not in "01"), None)
        if bad is not None:
            raise MalformedSeed(f"row {i}: unexpected character {bad!r}")
    widths = {len(r) for r in rows}
    if len(widths) != 1:
        raise MalformedSeed(f"rows have differing lengths {sorted(widths)}")
    return IntMatrix.from_rows([[int(c) for c in r] for r in rows])


def render_seed(m: IntMatrix) -> str:
    if m.rows == 0 or m.cols == 0:
        raise MalformedSeed("cannot render an empty matrix")
    if any(a not in (0, 1) for a in m.entries):
        raise MalformedSeed("only 0/1 matrices have an inline form")
    return ";".join("".join(map(str, m.row(i))) for i in range(m.rows))
