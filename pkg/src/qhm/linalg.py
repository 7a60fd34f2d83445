"""Deterministic dense linear algebra for small symmetric problems.

Everything here is built on one engine, a cyclic Jacobi eigendecomposition
with a fixed sweep order, so that eigenvalues, eigenvectors, ranks and
pseudoinverse solutions are bit-reproducible across runs and platforms.
The matrices in this package are tiny (tens of points), where Jacobi is both
fast enough and exceptionally accurate.
"""

from __future__ import annotations

import math

import numpy as np


def _rotate(a: np.ndarray, v: np.ndarray, p: int, q: int, c: float, s: float) -> None:
    # two-sided application of the Givens rotation in the (p, q) plane
    ap = a[:, p].copy()
    aq = a[:, q].copy()
    a[:, p] = c * ap - s * aq
    a[:, q] = s * ap + c * aq
    ap = a[p, :].copy()
    aq = a[q, :].copy()
    a[p, :] = c * ap - s * aq
    a[q, :] = s * ap + c * aq
    a[p, q] = 0.0
    a[q, p] = 0.0
    vp = v[:, p].copy()
    vq = v[:, q].copy()
    v[:, p] = c * vp - s * vq
    v[:, q] = s * vp + c * vq


def jacobi_eigh(a, sweep_tol: float = 1e-14, max_sweeps: int = 64):
    """Eigendecomposition of a real symmetric matrix by cyclic Jacobi rotations.

    Rotations are applied in row-major order over the strict upper triangle,
    sweep after sweep, until the off-diagonal Frobenius norm drops below
    ``sweep_tol`` times the norm of the input.

    Returns
    -------
    w : ndarray
        Eigenvalues in ascending order.
    v : ndarray
        Matching orthonormal eigenvectors as columns. Each column's sign is
        normalized so its largest-magnitude entry is positive.
    """
    a = np.array(a, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("expected a square matrix")
    n = a.shape[0]
    v = np.eye(n)
    scale = float(np.linalg.norm(a))
    if n > 1 and scale > 0.0:
        # rotations with |a_pq| below this move the off-norm negligibly
        skip = sweep_tol * scale / (n * n)
        for _ in range(max_sweeps):
            off = math.sqrt(2.0 * float(np.sum(np.triu(a, 1) ** 2)))
            if off <= sweep_tol * scale:
                break
            for p in range(n - 1):
                for q in range(p + 1, n):
                    apq = a[p, q]
                    if abs(apq) <= skip:
                        continue
                    theta = 0.5 * (a[q, q] - a[p, p]) / apq
                    if abs(theta) > 1e150:
                        t = 0.5 / theta
                    else:
                        t = math.copysign(1.0, theta) / (abs(theta) + math.hypot(theta, 1.0))
                    c = 1.0 / math.sqrt(t * t + 1.0)
                    _rotate(a, v, p, q, c, t * c)
    w = np.diag(a).copy()
    order = np.argsort(w, kind="stable")
    w = w[order]
    v = v[:, order]
    for j in range(n):
        k = int(np.argmax(np.abs(v[:, j])))
        if v[k, j] < 0.0:
            v[:, j] = -v[:, j]
    return w, v


def eigh_pinv_solve(a, b, rank_rel: float = 1e-10):
    """Minimum-norm least-squares solution of a symmetric system ``a x = b``.

    Solved through the eigendecomposition pseudoinverse: eigenvalues of
    magnitude at most ``rank_rel`` times the largest are treated as zero.

    Returns ``(x, residual, rank, null_basis)`` where ``null_basis`` has the
    orthonormal near-null eigenvectors as columns.
    """
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    w, v = jacobi_eigh(a)
    largest = float(np.max(np.abs(w))) if w.size else 0.0
    keep = np.abs(w) > rank_rel * largest
    inv = np.zeros_like(w)
    inv[keep] = 1.0 / w[keep]
    x = v @ (inv * (v.T @ b))
    residual = float(np.linalg.norm(a @ x - b))
    return x, residual, int(np.count_nonzero(keep)), v[:, ~keep]


def symmetric_rank_and_nullspace(a, rank_rel: float = 1e-10):
    """Rank of a symmetric matrix and an orthonormal basis of its nullspace."""
    w, v = jacobi_eigh(np.asarray(a, dtype=float))
    largest = float(np.max(np.abs(w))) if w.size else 0.0
    keep = np.abs(w) > rank_rel * largest
    return int(np.count_nonzero(keep)), v[:, ~keep]


def gram_rank(a, rank_rel: float = 1e-10) -> int:
    """Rank of a rectangular matrix, decided on the eigenvalues of its Gram matrix.

    The effective singular-value cutoff is ``sqrt(rank_rel)`` relative, which
    is ample for the structural rank questions asked here.
    """
    a = np.asarray(a, dtype=float)
    w, _ = jacobi_eigh(a.T @ a)
    largest = float(np.max(np.abs(w))) if w.size else 0.0
    return int(np.count_nonzero(w > rank_rel * largest))


def lstsq_minnorm(a, b, rank_rel: float = 1e-10):
    """Minimum-norm least squares for a rectangular system via normal equations.

    Returns ``(x, residual)`` with ``residual = ||a x - b||_2``.
    """
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    x, _, _, _ = eigh_pinv_solve(a.T @ a, a.T @ b, rank_rel=rank_rel)
    return x, float(np.linalg.norm(a @ x - b))


def double_center(a) -> np.ndarray:
    """Conjugate a symmetric matrix by the centering projector ``I - J/n``."""
    a = np.asarray(a, dtype=float)
    n = a.shape[0]
    row = a.mean(axis=0)
    return a - row[None, :] - row[:, None] + row.mean()
