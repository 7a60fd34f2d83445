"""Wolfe's min-norm point against an exact face-enumeration oracle."""

import itertools

import numpy as np

from qhm.minnorm import min_norm_point_in_hull


def brute_force_min_norm(pts):
    """Exact answer by enumerating every face of the hull: for each subset,
    solve the affine minimizer and keep it when it is a convex combination."""
    n = pts.shape[0]
    best = np.inf
    for r in range(1, n + 1):
        for subset in itertools.combinations(range(n), r):
            sub = pts[list(subset)]
            m = len(subset)
            gram = sub @ sub.T
            sys = np.zeros((m + 1, m + 1))
            sys[:m, :m] = gram
            sys[:m, m] = 1.0
            sys[m, :m] = 1.0
            rhs = np.zeros(m + 1)
            rhs[m] = 1.0
            sol = np.linalg.lstsq(sys, rhs, rcond=None)[0]
            lam = sol[:m]
            if np.all(lam >= -1e-10):
                best = min(best, float(np.linalg.norm(lam @ sub)))
    return best


def test_single_point():
    res = min_norm_point_in_hull(np.array([[3.0, 4.0]]))
    assert res.converged
    assert abs(res.distance - 5.0) < 1e-12
    assert np.array_equal(res.weights, [1.0])


def test_segment_through_origin():
    pts = np.array([[-1.0, 1.0], [2.0, -2.0]])
    res = min_norm_point_in_hull(pts)
    assert res.distance < 1e-9
    assert np.allclose(res.weights @ pts, 0.0, atol=1e-9)


def test_triangle_origin_inside():
    pts = np.array([[1.0, 0.0], [-1.0, 1.0], [-1.0, -1.0]])
    assert min_norm_point_in_hull(pts).distance < 1e-9


def test_nearest_point_on_edge():
    # hull is the segment x=2, y in [-1, 3]; nearest point is (2, 0)
    pts = np.array([[2.0, -1.0], [2.0, 3.0]])
    res = min_norm_point_in_hull(pts)
    assert abs(res.distance - 2.0) < 1e-10
    assert np.allclose(res.point, [2.0, 0.0], atol=1e-9)


def test_zero_dimensional_points():
    res = min_norm_point_in_hull(np.zeros((3, 0)))
    assert res.distance == 0.0
    assert res.weights.sum() == 1.0


def test_weights_reconstruct_point():
    rng = np.random.default_rng(21)
    pts = rng.normal(size=(6, 3)) + 1.0
    res = min_norm_point_in_hull(pts)
    assert res.converged
    assert np.all(res.weights >= 0.0)
    assert abs(res.weights.sum() - 1.0) < 1e-9
    assert np.allclose(res.weights @ pts, res.point, atol=1e-9)


def test_against_face_enumeration_oracle():
    rng = np.random.default_rng(22)
    for trial in range(60):
        n = int(rng.integers(1, 8))
        k = int(rng.integers(1, 4))
        pts = rng.normal(size=(n, k)) + rng.normal(size=k)
        res = min_norm_point_in_hull(pts)
        ref = brute_force_min_norm(pts)
        assert res.converged
        assert abs(res.distance - ref) < 1e-8 * max(1.0, ref)
