"""The away-step Frank-Wolfe maximizer on small closed-form problems."""

import numpy as np

from qhm.frankwolfe import maximize_quadratic_on_simplex


def test_uniform_is_optimal_for_equilateral():
    q = 6.0 * (np.ones((3, 3)) - np.eye(3))
    res = maximize_quadratic_on_simplex(q, gap_tol=1e-12)
    assert res.converged
    assert res.iterations == 0  # uniform start is already optimal
    assert abs(res.value - 4.0) < 1e-12


def test_two_point():
    q = np.array([[0.0, 3.0], [3.0, 0.0]])
    res = maximize_quadratic_on_simplex(q, gap_tol=1e-12)
    assert res.converged
    assert abs(res.value - 1.5) < 1e-12
    assert np.allclose(res.weights, [0.5, 0.5], atol=1e-9)


def test_star_drops_the_hub():
    # hub + 3 leaves: the optimum is uniform on the leaves, value 4/3
    q = np.array(
        [[0, 1, 1, 1], [1, 0, 2, 2], [1, 2, 0, 2], [1, 2, 2, 0]], dtype=float
    )
    res = maximize_quadratic_on_simplex(q, gap_tol=1e-12)
    assert res.converged
    assert abs(res.value - 4.0 / 3.0) < 1e-9
    assert res.weights[0] < 1e-12  # away steps removed the hub entirely
    assert np.allclose(res.weights[1:], 1.0 / 3.0, atol=1e-6)


def test_iterates_stay_on_simplex():
    rng = np.random.default_rng(8)
    pts = rng.normal(size=(6, 2))
    diff = pts[:, None, :] - pts[None, :, :]
    q = np.sqrt(np.einsum("ijk,ijk->ij", diff, diff))
    res = maximize_quadratic_on_simplex(q, gap_tol=1e-10)
    assert res.converged
    assert res.gap <= 1e-10
    assert np.all(res.weights >= 0.0)
    assert abs(res.weights.sum() - 1.0) < 1e-12


def test_matches_coarse_grid_on_random_instances():
    rng = np.random.default_rng(9)
    steps = 60
    grid = []
    for i in range(steps + 1):
        for j in range(steps + 1 - i):
            k = steps - i - j
            grid.append((i / steps, j / steps, k / steps))
    grid = np.array(grid)
    for _ in range(10):
        pts = rng.normal(size=(3, 2))
        diff = pts[:, None, :] - pts[None, :, :]
        q = np.sqrt(np.einsum("ijk,ijk->ij", diff, diff))
        res = maximize_quadratic_on_simplex(q, gap_tol=1e-12)
        brute = float(((grid @ q) * grid).sum(axis=1).max())
        assert res.value >= brute - 1e-12
        assert res.value - brute < 5e-3  # grid resolution error only
