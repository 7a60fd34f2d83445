"""Schoenberg embeddings: realizing (X, sqrt(d)) as points in Euclidean space.

A finite space is quasihypermetric exactly when the doubly centred kernel
G = -1/2 P d P is positive semidefinite; its spectral square root then gives
coordinates whose squared Euclidean distances reproduce d, with the centroid
at the origin and the dimension equal to the rank of G. On such an embedding
the energy of a mass-1 weight vector w is  2 r^2 - 2 |sum_i w_i y_i - z|^2
whenever the points lie on a sphere (centre z, radius r), which ties the
sphere data to the energy constants: M = 2 r^2 and M+ = 2 (r^2 - s^2), with
s the distance from the centre to the convex hull of the points.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, replace

import numpy as np

from .errors import ContradictionError, ConvergenceWarning, NotQuasihypermetricError, PreconditionError
from .linalg import double_center, gram_rank, jacobi_eigh, lstsq_minnorm
from .metric import MetricSpace, SignedMeasure
from .minnorm import min_norm_point_in_hull
from .tolerances import DEFAULT_TOLERANCES, Tolerances
from . import mconstant


@dataclass(frozen=True)
class Sphere:
    centre: np.ndarray
    radius: float
    residual: float  # relative least-squares residual of the sphere conditions


@dataclass(frozen=True)
class SEmbedding:
    """Coordinates of a Schoenberg embedding, plus optional sphere geometry.

    ``points`` is an (n, dim) array whose rows satisfy
    |y_i - y_j|^2 = d(i, j); ``dim`` is the numerical rank of the centred
    kernel, i.e. the minimal embedding dimension. ``gram_eigenvalues`` keeps
    the full kernel spectrum (descending) for diagnostics.
    """

    space: MetricSpace
    points: np.ndarray
    dim: int
    gram_eigenvalues: np.ndarray
    sphere: Sphere | None = None
    hull_distance: float | None = None

    @property
    def m_plus_geometric(self) -> float | None:
        """2 (r^2 - s^2), when both sphere and hull distance are known."""
        if self.sphere is None or self.hull_distance is None:
            return None
        return 2.0 * (self.sphere.radius**2 - self.hull_distance**2)

    def squared_point_distances(self) -> np.ndarray:
        diff = self.points[:, None, :] - self.points[None, :, :]
        return np.einsum("ijk,ijk->ij", diff, diff)


def s_embed(space: MetricSpace, tol: Tolerances | None = None) -> SEmbedding:
    """Embed (X, sqrt(d)) in Euclidean space of minimal dimension.

    Raises ``NotQuasihypermetricError`` (with the offending mass-zero vector)
    if the centred kernel has a significantly negative eigenvalue.
    """
    t = tol if tol is not None else DEFAULT_TOLERANCES
    n = space.n
    if n == 1:
        return SEmbedding(space, np.zeros((1, 0)), 0, np.zeros(1))
    g = -0.5 * double_center(space.dist)
    w, v = jacobi_eigh(g)
    if w[0] < -t.pos_tol(n, space.diameter):
        alpha = v[:, 0] - v[:, 0].mean()
        alpha /= np.linalg.norm(alpha)
        raise NotQuasihypermetricError(
            f"centred kernel has negative eigenvalue {w[0]:.3e}; no Schoenberg embedding",
            witness=SignedMeasure(space, alpha),
        )
    order = np.argsort(-w, kind="stable")
    w = w[order]
    v = v[:, order]
    keep = w >= t.rank * max(w[0], 0.0)
    keep &= w > 0.0
    dim = int(np.count_nonzero(keep))
    points = v[:, keep] * np.sqrt(w[keep])[None, :]
    emb = SEmbedding(space, points, dim, w)
    err = float(np.max(np.abs(emb.squared_point_distances() - space.dist)))
    if err > t.emb_tol(space.diameter):
        raise ContradictionError(
            f"embedding is not isometric within tolerance (max deviation {err:.3e})"
        )
    return emb


def fit_circumsphere(emb: SEmbedding) -> Sphere:
    """Least-squares circumsphere of the embedded points, never thresholded.

    Solves the linear conditions 2 (y_1 - y_i) . z = |y_1|^2 - |y_i|^2 and
    reports the relative residual; a genuinely spherical point set has
    residual at machine level, a non-spherical one a large residual.
    """
    pts = emb.points
    n = pts.shape[0]
    if n == 1:
        return Sphere(pts[0].copy(), 0.0, 0.0)
    sq = np.einsum("ij,ij->i", pts, pts)
    a = 2.0 * (pts[0][None, :] - pts[1:])
    rhs = sq[0] - sq[1:]
    z, residual = lstsq_minnorm(a, rhs)
    radii = np.linalg.norm(pts - z[None, :], axis=1)
    rel = residual / (math.sqrt(n - 1) * max(1.0, emb.space.diameter))
    return Sphere(z, float(radii.mean()), rel)


def circumsphere(emb: SEmbedding, tol: Tolerances | None = None) -> Sphere | None:
    """The circumsphere of the embedding, or None when the points are not
    concyclic within tolerance (equivalently, when M(X) is infinite)."""
    t = tol if tol is not None else DEFAULT_TOLERANCES
    sphere = fit_circumsphere(emb)
    if sphere.residual <= t.sphere:
        return sphere
    return None


def with_circumsphere(emb: SEmbedding, tol: Tolerances | None = None) -> SEmbedding:
    return replace(emb, sphere=circumsphere(emb, tol=tol))


def hull_distance(emb: SEmbedding, tol: Tolerances | None = None) -> float:
    """Distance from the sphere centre to the convex hull of the points.

    Computed by the min-norm-point method on the centred points. Requires the
    circumsphere; warns if the solver hits its cap.
    """
    t = tol if tol is not None else DEFAULT_TOLERANCES
    if emb.sphere is None:
        raise PreconditionError("hull distance needs the circumsphere; attach it first")
    result = min_norm_point_in_hull(emb.points - emb.sphere.centre[None, :], tol=t.minnorm)
    if not result.converged:
        warnings.warn(
            ConvergenceWarning("min-norm-point hit its iteration cap; value may be loose"),
            stacklevel=2,
        )
    return result.distance


def with_hull_distance(emb: SEmbedding, tol: Tolerances | None = None) -> SEmbedding:
    return replace(emb, hull_distance=hull_distance(emb, tol=tol))


def full_embedding(space: MetricSpace, tol: Tolerances | None = None) -> SEmbedding:
    """Embedding with circumsphere and, when it exists, hull distance attached."""
    emb = with_circumsphere(s_embed(space, tol=tol), tol=tol)
    if emb.sphere is not None:
        emb = with_hull_distance(emb, tol=tol)
    return emb


def recentred_embedding(space: MetricSpace, tol: Tolerances | None = None) -> SEmbedding:
    """Embedding translated so the circumsphere centre is the origin.

    Requires finite M(X); then every point satisfies |y_i|^2 = M/2, which is
    verified. A missing circumsphere alongside finite M is a contradiction
    (tolerance failure) and raises.
    """
    t = tol if tol is not None else DEFAULT_TOLERANCES
    report = mconstant.compute_m(space, tol=t)
    if not report.is_finite:
        raise PreconditionError("recentred embedding needs finite M(X)")
    emb = s_embed(space, tol=t)
    sphere = circumsphere(emb, tol=t)
    if sphere is None:
        raise ContradictionError(
            "M(X) is finite but the embedding has no circumsphere within tolerance "
            f"(residual {fit_circumsphere(emb).residual:.3e})"
        )
    points = emb.points - sphere.centre[None, :]
    half_m = 0.5 * report.m_value
    dev = float(np.max(np.abs(np.einsum("ij,ij->i", points, points) - half_m)))
    if dev > t.emb_tol(max(space.diameter, report.m_value)):
        raise ContradictionError(
            f"recentred points do not satisfy |y|^2 = M/2 within tolerance (deviation {dev:.3e})"
        )
    return SEmbedding(
        space,
        points,
        emb.dim,
        emb.gram_eigenvalues,
        sphere=Sphere(np.zeros(emb.dim), sphere.radius, sphere.residual),
        hull_distance=emb.hull_distance,
    )


def affinely_independent(emb: SEmbedding, tol: Tolerances | None = None) -> bool:
    """Whether the embedded points are affinely independent."""
    t = tol if tol is not None else DEFAULT_TOLERANCES
    n = emb.points.shape[0]
    homog = np.hstack([emb.points, np.ones((n, 1))])
    return gram_rank(homog, rank_rel=t.rank) == n


def embedding_to_json(emb: SEmbedding) -> dict:
    """JSON-ready form: {"dim", "points", "sphere", "hull_distance"}."""
    doc: dict = {
        "dim": emb.dim,
        "points": [[float(x) for x in row] for row in emb.points],
        "sphere": None,
        "hull_distance": emb.hull_distance,
    }
    if emb.sphere is not None:
        doc["sphere"] = {
            "centre": [float(x) for x in emb.sphere.centre],
            "radius": emb.sphere.radius,
            "residual": emb.sphere.residual,
        }
    return doc
