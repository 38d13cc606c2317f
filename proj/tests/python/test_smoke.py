"""End-to-end checks of the python module against known values."""

import math

import pytest

import lipscope as lip


def test_matrix_roundtrip():
    m = lip.Matrix([[1.0, 2.0], [3.0, 4.0]])
    assert m.rows == 2 and m.cols == 2
    assert m.to_rows() == [[1.0, 2.0], [3.0, 4.0]]
    assert m[1, 0] == 3.0


def test_spectral_norm_known_values():
    assert lip.spectral_norm(lip.Matrix([[3.0, 0.0], [0.0, 4.0]])) == pytest.approx(4.0)
    golden = (1.0 + math.sqrt(5.0)) / 2.0
    assert lip.spectral_norm(lip.Matrix([[1.0, 1.0], [0.0, 1.0]])) == pytest.approx(
        golden, rel=1e-12
    )


def test_sym_eigs_sorted():
    eigs = lip.sym_eigs(lip.Matrix([[2.0, 1.0], [1.0, 2.0]]))
    assert eigs == pytest.approx([1.0, 3.0], rel=1e-12)


def test_lyapunov_and_hurwitz():
    a = lip.Matrix([[-1.0, 0.0], [0.0, -1.0]])
    p = lip.lyapunov_solve(a, lip.Matrix.identity(2))
    assert p.to_rows()[0][0] == pytest.approx(0.5, rel=1e-12)
    assert lip.is_hurwitz(a)
    assert not lip.is_hurwitz(lip.Matrix([[1.0]]))


def test_rng_reproducibility():
    a = lip.RngStream(42)
    b = lip.RngStream(42)
    assert [a.next_uniform() for _ in range(5)] == [b.next_uniform() for _ in range(5)]
    sub = lip.derive_substream(7, 0)
    assert sub.next_uniform() == pytest.approx(0.5243459416779314, abs=0.0)


def test_network_sampling_and_bounds():
    net = lip.sample_network([2, 50, 2], sigma_w=1.0, sigma_b=0.0, seed=3)
    report = lip.bound_report(net)
    assert report.exact_lower <= report.exact_upper
    assert report.rmt_upper == pytest.approx(
        lip.rmt_upper_bound([2, 50, 2], 1.0), rel=1e-12
    )
    y = lip.forward(net, [0.5, -0.25])
    assert len(y) == 2


def test_rmt_closed_forms():
    assert lip.rmt_upper_bound([4, 4, 4, 4], 1.0) == pytest.approx(64.0, rel=1e-12)
    assert lip.rmt_lower_bound([4, 4, 4, 4], 1.0) == pytest.approx(16.0, rel=1e-12)
    assert lip.product_matrix_sigma([3, 9, 3], 2.0) == pytest.approx(12.0, rel=1e-12)


def test_stability_certification():
    sys = lip.system_new(
        lip.Matrix([[0.0, 2700.0], [-3600.0, -5400.0]]), lip.Matrix.identity(2)
    )
    assert sys.threshold > 0
    pct = lip.stability_likelihood(sys, [2, 300, 2], 1.0, trials=10, master_seed=0)
    assert pct == 100.0


def test_trajectory_stretch():
    circle = lip.circle_trajectory(2, 1.0, 1024)
    assert lip.trajectory_length(circle) == pytest.approx(2 * math.pi, rel=1e-4)
    net = lip.sample_network([2, 30, 2], 1.0, 0.0, seed=9)
    stretch = lip.output_trajectory_length(net, circle) / lip.trajectory_length(circle)
    assert 0 < stretch <= lip.exact_upper_bound(net) * (1 + 1e-9)


def test_training_smoke():
    data = lip.generate_dataset(256, 1)
    cfg = lip.TrainConfig(hidden=8, epochs=2, seed=5)
    result = lip.train_sgd(cfg, data)
    assert math.isfinite(result.final_mse)
    rows = lip.norm_comparison_report([result.network])
    assert len(rows) == 2
    assert all(r.true_norm > 0 for r in rows)


def test_errors_surface_as_exceptions():
    with pytest.raises(lip.NumericError):
        lip.system_new(lip.Matrix.identity(2), lip.Matrix.identity(2))
    with pytest.raises(ValueError):
        lip.Matrix([[1.0, 2.0], [3.0]])
