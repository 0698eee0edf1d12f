import numpy as np
import pytest

import gzk


def gaussian(grid, sigma=1.0, amp=1.0):
    x, y = np.meshgrid(grid.x, grid.y, indexing="ij")
    return amp * np.exp(-(x**2 + y**2) / (2 * sigma**2)) + 0j


def test_grid_coordinates():
    g = gzk.Grid(16, 8, 4.0, 2.0)
    assert g.x[0] == -2.0
    assert np.allclose(np.diff(g.x), 0.25)
    assert g.xi[1] == pytest.approx(2 * np.pi / 4.0)


def test_forward_inverse_round_trip():
    g = gzk.Grid(16, 16, 10.0, 10.0)
    u = np.random.default_rng(0).normal(size=(16, 16)) + 0j
    assert np.allclose(gzk.inverse(g, gzk.forward(g, u)), u, atol=1e-13)


def test_group_is_unitary_and_composes():
    g = gzk.Grid(32, 32, 20.0, 20.0)
    u = gaussian(g)
    w = gzk.propagate(g, u, 0.7)
    assert np.linalg.norm(w) == pytest.approx(np.linalg.norm(u), rel=1e-12)
    assert np.allclose(gzk.propagate(g, w, 0.7), gzk.propagate(g, u, 1.4), atol=1e-12)


def test_stein_matches_multiplier():
    g = gzk.Grid(64, 64, 30.0, 30.0)
    u = gaussian(g)
    a = gzk.stein_deriv(g, u, "x", 0.5)
    b = gzk.frac_deriv(g, u, "x", 0.5)
    assert np.linalg.norm(a - b) / np.linalg.norm(b) < 1e-3


def test_commutator_and_norms():
    g = gzk.Grid(128, 128, 40.0, 40.0)
    u = gaussian(g)
    rep = gzk.commutator_check(g, u, 0.5)
    assert rep["residual_max"] < 1e-3
    assert gzk.phi_operator(g, u, "x", 0.0, 0.5) == pytest.approx(0.0)
    assert gzk.weighted_l2(g, u * np.exp(0j), 1.0, 1.0) > 0
    assert gzk.hs_norm(g, u, 0.0) == pytest.approx(3 * np.sqrt(np.pi), rel=1e-10)


def test_solver_round_trip():
    g = gzk.Grid(64, 64, 40.0, 40.0)
    u = 0.1 * gaussian(g)
    t = gzk.local_time(g, u)
    times, traj = gzk.evolve(g, u, horizon=t, steps=16)
    assert traj.shape == (17, 64, 64)
    _, pic, history = gzk.picard_solve(g, u, horizon=t, steps=16)
    assert np.abs(traj - pic).max() < 1e-6
    assert history[-1] < 1e-10
    m0, _ = gzk.invariants(g, traj[0].real + 0j)
    m1, _ = gzk.invariants(g, traj[-1].real + 0j)
    assert m1 == pytest.approx(m0, rel=1e-9)
    mu1, mu2, terms = gzk.mu_norms(g, list(times), traj)
    assert mu2 >= mu1 > 0
    assert "weighted_LinfT_L2xy" in terms


def test_errors_are_typed():
    g = gzk.Grid(16, 16, 10.0, 10.0)
    with pytest.raises(gzk.ValidationError):
        gzk.stein_deriv(g, np.zeros((16, 16), complex), "x", 1.5)
    with pytest.raises(ValueError):
        gzk.Grid(12, 16, 1.0, 1.0)
    wide = gaussian(gzk.Grid(16, 16, 4.0, 4.0), sigma=3.0)
    with pytest.raises(gzk.NumericalGuardError):
        gzk.weighted_l2(gzk.Grid(16, 16, 4.0, 4.0), wide, 0.5, 0.5)


def test_field_file_round_trip(tmp_path):
    g = gzk.Grid(8, 8, 3.0, 3.0)
    u = gaussian(g)
    for name in ("u.gzkf", "u.txt"):
        gzk.save_field(str(tmp_path / name), g, u)
        g2, v = gzk.load_field(str(tmp_path / name))
        assert (g2.nx, g2.lx) == (8, 3.0)
        assert np.array_equal(u, v)


def test_run_experiment():
    status, values, failures = gzk.run_experiment(
        {"experiment.name": "persistence", "grid.nx": "32", "grid.lx": "20", "data.kind": "zero", "solver.steps": "8"}
    )
    assert status == 0 and not failures
    assert values["mu2"] == 0.0
    with pytest.raises(gzk.ValidationError, match="r1=1.2"):
        gzk.run_experiment({"weights.r1": "1.2"})
