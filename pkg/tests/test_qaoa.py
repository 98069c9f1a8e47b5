"""QAOA statevector simulator, optimizer and shot sampling."""

import numpy as np
import pytest

from conftest import random_ising
from isingcloak import (
    IsingModel,
    QaoaParams,
    brute_force,
    decrypt1,
    encrypt1,
    energy_table,
    expectation,
    gen_key1,
    optimize,
    sample,
    simulate,
)

SINGLE_EDGE = IsingModel(2, (0.0, 0.0), {(0, 1): 1.0})


def dense_single_edge_state(gamma, beta):
    """Independent 4x4 matrix construction of one layer on one +1 edge."""
    f = np.array([1.0, -1.0, -1.0, 1.0])  # energies by enumeration index
    psi = np.full(4, 0.5, dtype=np.complex128)
    psi = np.diag(np.exp(-1j * gamma * f)) @ psi
    c, s = np.cos(beta), -1j * np.sin(beta)
    rx = np.array([[c, s], [s, c]])
    return np.kron(rx, rx) @ psi


class TestSimulate:
    def test_zero_layers_uniform(self):
        state = simulate(SINGLE_EDGE, QaoaParams((), ()))
        assert np.allclose(np.abs(state) ** 2, 0.25)

    def test_identity_gates(self):
        state = simulate(SINGLE_EDGE, QaoaParams((0.0,), (0.0,)))
        assert np.allclose(state, 0.5)

    def test_matches_dense_matrix_oracle(self):
        for gamma in np.linspace(0.0, np.pi, 7):
            for beta in np.linspace(-np.pi / 2, np.pi / 2, 7):
                state = simulate(SINGLE_EDGE, QaoaParams((gamma,), (beta,)))
                ref = dense_single_edge_state(gamma, beta)
                assert np.max(np.abs(state - ref)) <= 1e-12

    def test_norm_preserved(self):
        rng = np.random.default_rng(60)
        m = random_ising(rng, n=6)
        for p in range(1, 5):
            params = QaoaParams(tuple(rng.uniform(0, np.pi, p)), tuple(rng.uniform(0, np.pi, p)))
            state = simulate(m, params)
            assert abs(np.linalg.norm(state) - 1.0) <= 1e-9

    def test_cap(self):
        with pytest.raises(ValueError, match="cap"):
            simulate(IsingModel(17, (0.0,) * 17, {}), QaoaParams((), ()))


class TestExpectation:
    def test_uniform_average(self):
        assert expectation(SINGLE_EDGE, QaoaParams((), ())) == 0.0

    def test_closed_form_optimum(self):
        value = expectation(SINGLE_EDGE, QaoaParams((np.pi / 4,), (-np.pi / 8,)))
        assert value == pytest.approx(-1.0, abs=1e-9)

    def test_closed_form_on_grid(self):
        for gamma in np.linspace(0.0, np.pi, 9):
            for beta in np.linspace(-np.pi / 2, np.pi / 2, 9):
                value = expectation(SINGLE_EDGE, QaoaParams((gamma,), (beta,)))
                assert value == pytest.approx(np.sin(4 * beta) * np.sin(2 * gamma), abs=1e-9)

    def test_never_below_global_min(self):
        rng = np.random.default_rng(61)
        for _ in range(10):
            m = random_ising(rng, n=4)
            params = QaoaParams(tuple(rng.uniform(0, np.pi, 2)), tuple(rng.uniform(0, np.pi, 2)))
            assert expectation(m, params) >= brute_force(m).global_min - 1e-9

    def test_offset_included(self):
        shifted = IsingModel(2, (0.0, 0.0), {(0, 1): 1.0}, offset=5.0)
        assert expectation(shifted, QaoaParams((), ())) == 5.0

    def test_matches_oracle_energy_weighting(self):
        rng = np.random.default_rng(62)
        m = random_ising(rng, n=5)
        params = QaoaParams((0.3, 0.7), (0.2, 0.9))
        probs = np.abs(simulate(m, params)) ** 2
        assert expectation(m, params) == pytest.approx(
            float(probs @ energy_table(m)), rel=1e-12, abs=1e-12
        )


class TestOptimize:
    def test_single_edge_reaches_optimum(self):
        params, trace = optimize(SINGLE_EDGE, 1, max_iters=200, rng=np.random.default_rng(63))
        assert len(trace) <= 200
        ratio = trace[-1] / brute_force(SINGLE_EDGE).global_min
        assert ratio >= 0.99

    def test_trace_non_increasing(self):
        _, trace = optimize(SINGLE_EDGE, 1, max_iters=150, rng=np.random.default_rng(64))
        assert all(b <= a for a, b in zip(trace, trace[1:]))

    def test_deterministic_per_seed(self):
        a, _ = optimize(SINGLE_EDGE, 2, max_iters=120, rng=np.random.default_rng(65))
        b, _ = optimize(SINGLE_EDGE, 2, max_iters=120, rng=np.random.default_rng(65))
        assert a == b

    def test_validation(self):
        with pytest.raises(ValueError):
            optimize(SINGLE_EDGE, 0, max_iters=10)
        with pytest.raises(ValueError):
            optimize(SINGLE_EDGE, 1, max_iters=0)


class TestSample:
    def test_frequencies_converge(self):
        rng = np.random.default_rng(66)
        m = random_ising(rng, n=4)
        params = QaoaParams((0.4,), (0.3,))
        state = simulate(m, params)
        dist = sample(state, 100_000, rng)
        probs = np.abs(state) ** 2
        for k, p in enumerate(probs):
            observed = dist.weights.get(format(k, "04b")[::-1], 0.0)
            assert abs(observed - p) < 0.01

    def test_deterministic_per_seed(self):
        state = simulate(SINGLE_EDGE, QaoaParams((0.5,), (0.25,)))
        a = sample(state, 1000, np.random.default_rng(4))
        b = sample(state, 1000, np.random.default_rng(4))
        assert a == b

    def test_basis_state(self):
        state = np.zeros(4, dtype=np.complex128)
        state[2] = 1.0  # bitstring "01"
        dist = sample(state, 500, np.random.default_rng(5))
        assert dist.weights == {"01": 1.0}

    def test_shots_validated(self):
        with pytest.raises(ValueError):
            sample(np.ones(2) / np.sqrt(2), 0)


class TestCipheredLandscape:
    def test_decrypted_ground_states_coincide(self):
        # optimize the ciphered single edge, sample it, decrypt: the top
        # outcomes must be exactly the original problem's ground states
        rng = np.random.default_rng(67)
        key = gen_key1(2, rng)
        enc = encrypt1(SINGLE_EDGE, key)
        params, trace = optimize(enc, 1, max_iters=200, rng=rng)
        assert trace[-1] / brute_force(enc).global_min >= 0.99
        dist = sample(simulate(enc, params), 50_000, rng)
        decoded = decrypt1(dist, key)
        top = sorted(decoded.weights, key=lambda b: -decoded.weights[b])[:2]
        assert set(top) == brute_force(SINGLE_EDGE).argmin_set
