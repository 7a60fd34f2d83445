"""Away-step Frank-Wolfe maximization of a quadratic over the probability simplex.

The vertices of the simplex are the coordinate directions, so the iterate's
convex decomposition is just the iterate itself: toward-steps add weight to
the best coordinate, away-steps strip weight from the worst supported one
(which is what lets the method drop coordinates and converge linearly on
faces). Line search is exact, since the objective restricted to a segment is
a one-dimensional quadratic.

The iteration's linear rate degrades when the simplex geometry under the
quadratic is nearly degenerate (almost-coincident points), so an exact
active-set finish runs periodically and at the end: solve the stationarity
system on the current face, drop negative vertices, grow by the best outside
vertex, until the gap criterion is met or the face stops changing.

Ties in vertex selection break toward the lowest index, so runs are fully
deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .linalg import eigh_pinv_solve


@dataclass(frozen=True)
class SimplexMaxResult:
    weights: np.ndarray
    value: float
    gap: float
    iterations: int
    converged: bool


def _face_stationary(q: np.ndarray, support: np.ndarray) -> np.ndarray | None:
    """Weights solving 2 q x = nu 1, sumable to 1, on one face of the simplex.

    The Gram block is normalized so the constraint row is not drowned at
    large distance scales. Returns the raw face weights (possibly negative),
    or None when the bordered system is inconsistent.
    """
    m = support.size
    scale = float(np.max(np.abs(q))) if q.size else 0.0
    system = np.zeros((m + 1, m + 1))
    system[:m, :m] = 2.0 * q[np.ix_(support, support)] / max(scale, 1e-300)
    system[:m, m] = 1.0
    system[m, :m] = 1.0
    rhs = np.zeros(m + 1)
    rhs[m] = 1.0
    sol, residual, _, _ = eigh_pinv_solve(system, rhs)
    if not (residual <= 1e-9 and abs(sol[:m].sum() - 1.0) <= 1e-9):
        return None
    return sol[:m]


def _active_set_finish(q: np.ndarray, x: np.ndarray, gap_tol: float) -> np.ndarray:
    """Polish an iterate by exact solves on faces of the simplex.

    Starting from the support of ``x``: solve the face's stationarity system,
    drop the most negative vertex while there is one, accept the solution if
    it does not lose objective value, and grow the face by the best outside
    vertex while the gap criterion asks for it. Any failure leaves the best
    point found so far, never a worse one.
    """
    n = x.shape[0]
    support = np.flatnonzero(x > 0.0)
    for _ in range(2 * n):
        if support.size == 0:
            break
        w = _face_stationary(q, support)
        if w is None:
            break
        if float(w.min()) < -1e-12:
            support = np.delete(support, int(np.argmin(w)))
            continue
        candidate = np.zeros(n)
        candidate[support] = np.maximum(w, 0.0)
        candidate /= candidate.sum()
        if float(candidate @ q @ candidate) >= float(x @ q @ x):
            x = candidate
        g = 2.0 * (q @ x)
        gap = float(g.max()) - float(g @ x)
        if gap <= gap_tol:
            break
        j = int(np.argmax(g))
        if j in support:
            break
        support = np.sort(np.append(support, j))
    return x


def maximize_quadratic_on_simplex(
    q: np.ndarray,
    gap_tol: float,
    max_iter: int = 100000,
    x0: np.ndarray | None = None,
) -> SimplexMaxResult:
    """Maximize ``x' q x`` over the probability simplex.

    ``q`` must be symmetric and concave along simplex directions (negative
    semidefinite on mass-zero vectors); then the toward-step gap
    ``max_i g_i - g.x`` upper-bounds the suboptimality and is used as the
    stopping criterion.
    """
    q = np.asarray(q, dtype=float)
    n = q.shape[0]
    x = np.full(n, 1.0 / n) if x0 is None else np.array(x0, dtype=float)
    gap = np.inf
    it = 0
    done = False
    for it in range(1, max_iter + 1):
        g = 2.0 * (q @ x)
        gx = float(g @ x)
        s = int(np.argmax(g))
        gap = float(g[s]) - gx
        if gap <= gap_tol:
            it -= 1
            done = True
            break
        if it % 256 == 0:
            # periodic exact finish so nearly-degenerate faces cannot make
            # the zig-zag burn the whole iteration budget
            x = _active_set_finish(q, x, gap_tol)
            g = 2.0 * (q @ x)
            gap = float(g.max()) - float(g @ x)
            if gap <= gap_tol:
                done = True
                break
            s = int(np.argmax(g))
            gx = float(g @ x)

        support = np.flatnonzero(x > 0.0)
        a = support[int(np.argmin(g[support]))]
        away_gap = gx - float(g[a])

        if gap >= away_gap or x[a] >= 1.0:
            d = -x.copy()
            d[s] += 1.0
            gamma_max = 1.0
        else:
            d = x.copy()
            d[a] -= 1.0
            gamma_max = x[a] / (1.0 - x[a])

        slope = float(g @ d)
        curv = float(d @ q @ d)  # <= 0 on mass-zero directions
        if curv < 0.0:
            gamma = min(gamma_max, -slope / (2.0 * curv))
        else:
            gamma = gamma_max
        if gamma <= 0.0:
            done = True
            break
        x = x + gamma * d
        np.maximum(x, 0.0, out=x)
        x[x < 1e-15] = 0.0
        x /= x.sum()

    x = _active_set_finish(q, x, gap_tol)
    g = 2.0 * (q @ x)
    gap = float(g.max()) - float(g @ x)
    return SimplexMaxResult(x, float(x @ q @ x), gap, it, done or gap <= gap_tol)
