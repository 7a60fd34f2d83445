"""Minimum-norm point in the convex hull of a finite point set (Wolfe's method).

Maintains a "corral": an affinely independent subset of the input points
whose affine minimizer has positive hull coordinates. Each major cycle adds
the vertex most violating the optimality condition  x.p_j >= |x|^2  and the
minor cycle walks back toward the previous iterate until the new affine
minimizer is again a proper convex combination. Terminates after finitely
many corrals in exact arithmetic; a generous iteration cap guards the
floating-point version.

The affine subproblem min |P λ| s.t. sum λ = 1 is solved through the
symmetric bordered system [[P P', 1], [1', 0]], with the same deterministic
eigendecomposition pseudoinverse used everywhere else in the package.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .linalg import eigh_pinv_solve


@dataclass(frozen=True)
class MinNormResult:
    point: np.ndarray  # the nearest point of the hull to the origin
    weights: np.ndarray  # simplex weights over the input points producing it
    distance: float
    iterations: int
    converged: bool


def _affine_minimizer(pts: np.ndarray) -> np.ndarray:
    m = pts.shape[0]
    gram = pts @ pts.T
    system = np.zeros((m + 1, m + 1))
    system[:m, :m] = gram
    system[:m, m] = 1.0
    system[m, :m] = 1.0
    rhs = np.zeros(m + 1)
    rhs[m] = 1.0
    sol, _, _, _ = eigh_pinv_solve(system, rhs)
    return sol[:m]


def min_norm_point_in_hull(points, tol: float = 1e-12, max_iter: int | None = None) -> MinNormResult:
    """Nearest point of conv{rows of ``points``} to the origin.

    ``tol`` controls both the optimality slack (relative to the squared point
    scale) and the weight cleanup inside corral updates. The initial vertex is
    the input point nearest the origin; all ties break toward the lowest
    index, making the run deterministic.
    """
    pts = np.asarray(points, dtype=float)
    n = pts.shape[0]
    if pts.ndim != 2:
        raise ValueError("expected an (n, k) array of points")
    if pts.shape[1] == 0:
        # zero-dimensional hull: everything sits at the origin
        w = np.zeros(n)
        w[0] = 1.0
        return MinNormResult(np.zeros(0), w, 0.0, 0, True)
    if max_iter is None:
        max_iter = 16 * n * n + 64

    # work on unit-scale points so the affine subproblem's Gram block and its
    # constraint row stay comparable and all tolerances are scale-free; the
    # answer is rescaled at the end
    unit = float(np.max(np.abs(pts)))
    if unit == 0.0:
        return MinNormResult(np.zeros(pts.shape[1]), np.eye(n)[0], 0.0, 0, True)
    pts = pts / unit

    norms = np.einsum("ij,ij->i", pts, pts)
    stop_slack = tol * max(float(np.max(norms)), 1.0)

    idx = [int(np.argmin(norms))]
    lam = np.array([1.0])
    x = pts[idx[0]].copy()
    it = 0
    converged = False
    for it in range(1, max_iter + 1):
        scores = pts @ x
        j = int(np.argmin(scores))
        if scores[j] > float(x @ x) - stop_slack:
            converged = True
            break
        if j in idx:
            # numerically stuck: the best vertex is already in the corral
            converged = True
            break
        idx.append(j)
        lam = np.append(lam, 0.0)
        while True:
            mu = _affine_minimizer(pts[idx])
            if np.all(mu > tol):
                lam = mu
                break
            shrink = np.flatnonzero(mu <= tol)
            with np.errstate(divide="ignore", invalid="ignore"):
                ratios = lam[shrink] / (lam[shrink] - mu[shrink])
            theta = float(np.min(ratios[np.isfinite(ratios)], initial=1.0))
            theta = min(max(theta, 0.0), 1.0)
            lam = (1.0 - theta) * lam + theta * mu
            keep = lam > tol
            if keep.all():
                # keep at least the touched coordinate out to avoid stalling
                keep[shrink[0]] = False
            idx = [i for i, k in zip(idx, keep) if k]
            lam = lam[keep]
            lam /= lam.sum()
        x = lam @ pts[idx]

    weights = np.zeros(n)
    for i, l in zip(idx, lam):
        weights[i] = l
    x = unit * x
    return MinNormResult(x, weights, float(np.linalg.norm(x)), it, converged)
