"""Adjacency and normalized-Laplacian spectra: exact verdicts, float display.

Verdicts are decided only by identity of exact characteristic polynomials.
Floating spectra (cyclic Jacobi) are attached for reporting and never feed a
verdict.
"""

from __future__ import annotations

import math
from typing import Sequence

import numpy as np

from .errors import NotSquare, NotSymmetric, ZeroVector
from .exact_matrix import IntMatrix, gen_char_poly, char_poly
from .graph_model import Graph
from .polynomial import IntPoly, RationalPoly
from .verdict import Verdict

JACOBI_TOL = 1e-12
JACOBI_MAX_SWEEPS = 100


def jacobi_eigenvalues(a, tol: float = JACOBI_TOL, max_sweeps: int = JACOBI_MAX_SWEEPS) -> list[float]:
    """Eigenvalues of a real symmetric matrix by the cyclic Jacobi method.

    Pivots are visited in row-major order (p < q) every sweep. Iteration
    stops once the off-diagonal Frobenius norm falls below ``tol`` times its
    initial value, or after ``max_sweeps`` sweeps.
    """
    A = np.array(a, dtype=float)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise NotSquare(f"expected a square matrix, got shape {A.shape}")
    n = A.shape[0]
    bad = np.argwhere(A != A.T)
    if len(bad):
        i, j = (int(x) for x in bad[0])
        raise NotSymmetric((i, j))

    def off_norm() -> float:
        return math.sqrt(max(0.0, float(np.sum(A * A) - np.sum(np.diag(A) ** 2))))

    off0 = off_norm()
    if off0 == 0.0:
        return sorted(float(x) for x in np.diag(A))
    for _ in range(max_sweeps):
        if off_norm() <= tol * off0:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = A[p, q]
                if apq == 0.0:
                    continue
                diff = A[q, q] - A[p, p]
                if abs(diff) + 100.0 * abs(apq) == abs(diff):
                    # pivot negligible against the diagonal gap; theta would overflow
                    t = apq / diff
                else:
                    theta = diff / (2.0 * apq)
                    t = math.copysign(1.0, theta) / (abs(theta) + math.hypot(theta, 1.0))
                c = 1.0 / math.hypot(t, 1.0)
                s = t * c
                col_p, col_q = A[:, p].copy(), A[:, q].copy()
                A[:, p] = c * col_p - s * col_q
                A[:, q] = s * col_p + c * col_q
                row_p, row_q = A[p, :].copy(), A[q, :].copy()
                A[p, :] = c * row_p - s * row_q
                A[q, :] = s * row_p + c * row_q
                A[p, q] = A[q, p] = 0.0
    return sorted(float(x) for x in np.diag(A))


def float_spectrum(m: IntMatrix) -> list[float]:
    """Sorted eigenvalues of a symmetric integer matrix (display only)."""
    if not m.is_square():
        raise NotSquare(f"expected a square matrix, got {m.rows}x{m.cols}")
    return jacobi_eigenvalues(m.to_numpy())


def normalized_laplacian_matrix(g: Graph) -> np.ndarray:
    """I - D^{-1/2} A D^{-1/2}, with rows of isolated vertices equal to the identity."""
    A = g.adjacency.to_numpy()
    deg = A.sum(axis=1)
    inv_sqrt = np.array([1.0 / math.sqrt(d) if d > 0 else 0.0 for d in deg])
    L = np.eye(g.order) - inv_sqrt[:, None] * A * inv_sqrt[None, :]
    return (L + L.T) / 2.0


def normalized_float_spectrum(g: Graph) -> list[float]:
    return jacobi_eigenvalues(normalized_laplacian_matrix(g))


def adjacency_charpoly(g: Graph) -> IntPoly:
    return char_poly(g.adjacency)


def normalized_laplacian_charpoly(g: Graph) -> RationalPoly:
    """Exact det(xI - L) for the normalized Laplacian.

    On the non-isolated part (adjacency A1, degree matrix D1) this is
    det((x - 1) D1 + A1) / det(D1) = det(x D1 - (D1 - A1)) / det(D1);
    each of the k isolated vertices contributes a factor (x - 1).
    """
    degs = g.degrees()
    keep = [v for v, d in enumerate(degs) if d > 0]
    k = g.order - len(keep)
    a1 = IntMatrix.from_rows([[g.adjacency[i, j] for j in keep] for i in keep], cols=len(keep))
    d1 = IntMatrix.diagonal([degs[v] for v in keep])
    num = gen_char_poly(d1 - a1, d1) * IntPoly.linear(1) ** k
    return RationalPoly(num, math.prod(degs[v] for v in keep))


def poly_witness(p: IntPoly | RationalPoly) -> dict:
    if isinstance(p, RationalPoly):
        return {"numerator": p.numerator.tolist(), "denominator": p.denominator}
    return {"coefficients": p.tolist()}


def first_difference(p: IntPoly | RationalPoly, q: IntPoly | RationalPoly) -> dict | None:
    """Lowest-degree coefficient where p and q differ, or None if identical."""
    if isinstance(p, RationalPoly):
        a, b = p.coefficients(), q.coefficients()
    else:
        a, b = list(p.coeffs), list(q.coeffs)
    for i in range(max(len(a), len(b))):
        x = a[i] if i < len(a) else 0
        y = b[i] if i < len(b) else 0
        if x != y:
            return {"degree": i, "left": str(x), "right": str(y)}
    return None


def _compare(claim: str, g: Graph, h: Graph, poly_fn, spectrum_fn, with_spectra: bool) -> Verdict:
    spectra = (tuple(spectrum_fn(g)), tuple(spectrum_fn(h))) if with_spectra else ((), ())
    if g.order != h.order:
        return Verdict(claim, False, {"reason": "order", "orders": [g.order, h.order]}, *spectra)
    p, q = poly_fn(g), poly_fn(h)
    diff = first_difference(p, q)
    if diff is None:
        return Verdict(claim, True, {"polynomial": poly_witness(p)}, *spectra)
    return Verdict(
        claim, False,
        {"reason": "coefficient", "first_difference": diff,
         "left": poly_witness(p), "right": poly_witness(q)},
        *spectra,
    )


def adjacency_cospectral(g: Graph, h: Graph, with_spectra: bool = True) -> Verdict:
    return _compare(
        "adjacency-cospectral", g, h, adjacency_charpoly,
        lambda x: float_spectrum(x.adjacency), with_spectra,
    )


def normalized_cospectral(g: Graph, h: Graph, with_spectra: bool = True) -> Verdict:
    return _compare(
        "normalized-cospectral", g, h, normalized_laplacian_charpoly,
        normalized_float_spectrum, with_spectra,
    )


def harmonic_eigen_residual(g: Graph, lam: float, y: Sequence[float]) -> float:
    """||(D - A) y - lam D y||_inf / ||y||_inf."""
    y = np.asarray(y, dtype=float)
    if y.shape != (g.order,):
        raise ValueError(f"vector length {y.shape} does not match order {g.order}")
    scale = float(np.max(np.abs(y))) if y.size else 0.0
    if scale == 0.0:
        raise ZeroVector("harmonic residual needs a nonzero vector")
    A = g.adjacency.to_numpy()
    d = A.sum(axis=1)
    r = d * y - A @ y - lam * d * y
    return float(np.max(np.abs(r))) / scale
