import math

import numpy as np

import grassvol as gv


def test_closed_form_volumes():
    assert gv.sphere_volume(1) == 2 * math.pi
    assert math.isclose(gv.grassmann_volume(1, 2), math.pi, rel_tol=1e-14)
    assert math.isclose(gv.grassmann_volume(2, 4), math.pi**4 / 12, rel_tol=1e-14)
    assert gv.grassmann_volume(1, 5) == gv.grassmann_volume(4, 5)
    assert gv.chart_count(2, 4) == 6


def test_quadrature_and_mc():
    for n in range(2, 6):
        target = math.pi ** (n - 1) / math.factorial(n - 1)
        assert abs(gv.projective_volume_quadrature(n) - target) / target < 1e-8
    est = gv.mc_volume(2, 4, samples=200_000, seed=42, workers=2)
    target = math.pi**4 / 12
    assert abs(est["mean"] - target) / target < 0.02
    again = gv.mc_volume(2, 4, samples=200_000, seed=42, workers=4)
    assert again["mean"] == est["mean"]


def test_chart_projection():
    z = np.array([[0.3 + 0.4j]])
    p = gv.chart_point(2, 1, np.eye(2, dtype=complex), z)
    assert np.allclose(p @ p, p, atol=1e-12)
    assert abs(np.trace(p) - 1) < 1e-12
    assert math.isclose(gv.det_lambda(z), 1.25, rel_tol=1e-14)
    assert math.isclose(gv.volume_density(z, 2), 1.25**-2, rel_tol=1e-14)


def test_spectral_classification():
    rng = np.random.default_rng(7)
    g = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
    q, _ = np.linalg.qr(g)
    x = q @ np.diag([2.0, -1.0, -1.0, 0.0]) @ q.conj().T
    assert gv.in_kernel(x)
    assert gv.spectral_type(x) == [(-1, 2), (0, 1), (2, 1)]
    dec = gv.spectral_decompose(x)
    total = sum(dec["projections"])
    assert np.allclose(total, np.eye(4), atol=1e-9)
    desc = gv.flag_descriptor(dec["spectral_type"])
    assert desc["quotient"] == [2, 1, 1]
    assert not gv.in_kernel(x + 0.3 * np.eye(4))


def test_gates_and_pauli():
    w = gv.walsh_power(2)
    assert np.array_equal(w, 0.5 * np.array(
        [[1, 1, 1, 1], [1, -1, 1, -1], [1, 1, -1, -1], [1, -1, -1, 1]],
        dtype=complex))
    assert np.allclose(gv.repeated_cnot(3) @ gv.repeated_cnot(3), np.eye(8))
    marked, diffusion = gv.grover_reflections(3, 5)
    assert np.allclose(marked @ marked, np.eye(8), atol=1e-12)
    assert np.allclose(diffusion.conj().T @ diffusion, np.eye(8), atol=1e-12)
    shift, clock = gv.clock_shift(5)
    w5 = gv.vandermonde_w(5)
    assert np.allclose(w5 @ clock @ w5.conj().T, shift, atol=1e-12)
    assert gv.diagonalize_shift_error(12) < 1e-12


def test_synthesis():
    rng = np.random.default_rng(11)
    g = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
    u, _ = np.linalg.qr(g)
    rep = gv.synthesize_ccu(u)
    assert rep["gate_count"] == 5
    assert rep["max_error"] <= 1e-10
    assert np.allclose(rep["matrix"], rep["reference"], atol=1e-10)
    rep3 = gv.synthesize_cccu(u)
    assert rep3["gate_count"] == 17
    assert rep3["max_error"] <= 1e-9
    v = gv.unitary_root(u, 4)
    assert np.allclose(np.linalg.matrix_power(v, 4), u, atol=1e-11)
    assert gv.gate_count_table(3) == [(2, 5), (3, 17)]


def test_holonomy():
    loop = gv.latitude_loop(math.pi / 3, 4000)
    gamma = gv.holonomy("rotation", loop)
    expected = np.exp(1j * math.pi * (1 - math.cos(math.pi / 3)))
    assert abs(gamma[0, 0] - expected) < 1e-5
    trivial = [[0.0, 0.0]] * 3
    assert np.allclose(gv.holonomy("degenerate-m2", trivial), np.eye(2), atol=1e-12)


def test_harness():
    ids = gv.all_check_ids()
    assert "gates.walsh.t2" in ids
    recs = gv.run_checks(["gates.walsh.t2", "pauli.diagonalize"])
    assert [r["check_id"] for r in recs] == ["gates.walsh.t2", "pauli.diagonalize"]
    assert all(r["pass"] for r in recs)
    assert recs[0]["max_error"] == 0.0


if __name__ == "__main__":
    for name, fn in sorted(globals().items()):
        if name.startswith("test_") and callable(fn):
            fn()
            print(f"{name}: ok")
    print("smoke tests passed")
