"""Dense-statevector simulation of the alternating-operator ansatz.

Each layer applies the exact diagonal cost phase exp(-i * gamma * f(z))
built from the precomputed energy table (offset excluded, it is a
global phase) followed by an X rotation by angle 2*beta on every qubit.
Parameters are tuned by a derivative-free coordinate search with random
restarts, and measurement is simulated by multinomial shot sampling.
The dense simulator is capped at n <= 16.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import IsingModel, OutcomeDistribution
from .oracle import energy_table
from .util import as_rng, index_to_bitstring

SIMULATOR_CAP = 16

_GOLDEN = (np.sqrt(5.0) - 1.0) / 2.0


@dataclass(frozen=True)
class QaoaParams:
    """Per-layer angles; gammas drive the cost phase, betas the mixer."""

    gammas: tuple
    betas: tuple

    def __post_init__(self):
        gammas = tuple(float(g) for g in self.gammas)
        betas = tuple(float(b) for b in self.betas)
        if len(gammas) != len(betas):
            raise ValueError("gammas and betas must have equal length")
        object.__setattr__(self, "gammas", gammas)
        object.__setattr__(self, "betas", betas)

    @property
    def p(self) -> int:
        return len(self.gammas)


def _mix(state: np.ndarray, beta: float, n: int) -> np.ndarray:
    """Apply exp(-i*beta*X) to every qubit of a 2^n statevector."""
    c = np.cos(beta)
    s = -1j * np.sin(beta)
    for q in range(n):
        view = state.reshape(-1, 2, 1 << q)
        a0 = view[:, 0, :].copy()
        a1 = view[:, 1, :]
        view[:, 0, :] = c * a0 + s * a1
        view[:, 1, :] = s * a0 + c * a1
    return state


def _evolve(energies: np.ndarray, params: QaoaParams, n: int) -> np.ndarray:
    state = np.full(1 << n, 2.0 ** (-n / 2.0), dtype=np.complex128)
    for gamma, beta in zip(params.gammas, params.betas):
        state = state * np.exp(-1j * gamma * energies)
        state = _mix(state, beta, n)
    return state


def simulate(model: IsingModel, params: QaoaParams) -> np.ndarray:
    """Statevector after p layers, starting from the uniform superposition."""
    if model.n > SIMULATOR_CAP:
        raise ValueError(f"n={model.n} exceeds the simulator cap of {SIMULATOR_CAP}")
    energies = energy_table(model, include_offset=False)
    return _evolve(energies, params, model.n)


def expectation(model: IsingModel, params: QaoaParams) -> float:
    """Energy expectation of the final state, offset included."""
    if model.n > SIMULATOR_CAP:
        raise ValueError(f"n={model.n} exceeds the simulator cap of {SIMULATOR_CAP}")
    energies = energy_table(model, include_offset=False)
    state = _evolve(energies, params, model.n)
    probs = np.abs(state) ** 2
    return float(probs @ (energies + model.offset))


def _golden_refine(objective, lo: float, hi: float, iters: int):
    """Golden-section minimization on [lo, hi]; returns the best probe."""
    a, b = lo, hi
    x1 = b - _GOLDEN * (b - a)
    x2 = a + _GOLDEN * (b - a)
    f1, f2 = objective(x1), objective(x2)
    best = (f1, x1) if f1 <= f2 else (f2, x2)
    for _ in range(iters):
        if f1 <= f2:
            b, x2, f2 = x2, x1, f1
            x1 = b - _GOLDEN * (b - a)
            f1 = objective(x1)
        else:
            a, x1, f1 = x1, x2, f2
            x2 = a + _GOLDEN * (b - a)
            f2 = objective(x2)
        cand = (f1, x1) if f1 <= f2 else (f2, x2)
        if cand < best:
            best = cand
    return best


class _Budget(Exception):
    pass


def optimize(model: IsingModel, p: int, max_iters: int = 200, rng=None, restarts: int = 10):
    """Derivative-free parameter search.

    Runs up to ``restarts`` random starts with (gamma, beta) drawn
    uniformly from [0, pi) per layer; each start performs coordinate
    sweeps that scan a coarse grid over the coordinate's period and
    refine the best cell by golden section.  ``max_iters`` bounds the
    total number of objective evaluations across all restarts.

    Returns the best parameters found and the best-so-far expectation
    trace, one entry per evaluation (non-increasing by construction).
    """
    if p < 1:
        raise ValueError("p must be at least 1")
    if max_iters < 1:
        raise ValueError("max_iters must be at least 1")
    if model.n > SIMULATOR_CAP:
        raise ValueError(f"n={model.n} exceeds the simulator cap of {SIMULATOR_CAP}")
    rng = as_rng(rng)
    energies = energy_table(model, include_offset=False)
    n = model.n

    trace = []
    best_value = np.inf
    best_x = None

    def evaluate(x):
        nonlocal best_value, best_x
        if len(trace) >= max_iters:
            raise _Budget
        params = QaoaParams(tuple(x[:p]), tuple(x[p:]))
        state = _evolve(energies, params, n)
        value = float((np.abs(state) ** 2) @ energies) + model.offset
        if value < best_value:
            best_value = value
            best_x = np.array(x)
        trace.append(best_value)
        return value

    # gamma coordinates scanned over [0, 2*pi), beta over its exact
    # period [0, pi); grid first because the landscape is multimodal
    spans = [2.0 * np.pi] * p + [np.pi] * p
    grid_points = 10
    golden_iters = 14

    try:
        for _ in range(restarts):
            x = np.concatenate([rng.uniform(0.0, np.pi, p), rng.uniform(0.0, np.pi, p)])
            evaluate(x)
            for _sweep in range(2):
                for coord in range(2 * p):
                    span = spans[coord]
                    step = span / grid_points
                    grid = [k * step for k in range(grid_points)]
                    scores = []
                    for g in grid:
                        probe = x.copy()
                        probe[coord] = g
                        scores.append(evaluate(probe))
                    k_best = int(np.argmin(scores))
                    center = grid[k_best]

                    def line(t, coord=coord, x=x):
                        probe = x.copy()
                        probe[coord] = t
                        return evaluate(probe)

                    value, t_best = _golden_refine(line, center - step, center + step, golden_iters)
                    if value <= scores[k_best]:
                        x[coord] = t_best
                    else:
                        x[coord] = center
    except _Budget:
        pass

    if best_x is None:
        raise RuntimeError("optimization consumed no evaluations")
    return QaoaParams(tuple(best_x[:p]), tuple(best_x[p:])), trace


def sample(state: np.ndarray, shots: int, rng=None) -> OutcomeDistribution:
    """Multinomial shot sampling from the amplitudes' Born probabilities."""
    if shots < 1:
        raise ValueError("shots must be at least 1")
    rng = as_rng(rng)
    size = int(state.size)
    n = size.bit_length() - 1
    if 1 << n != size:
        raise ValueError("statevector length must be a power of two")
    probs = np.abs(np.asarray(state)) ** 2
    probs = probs / probs.sum()
    counts = rng.multinomial(shots, probs)
    weights = {
        index_to_bitstring(int(k), n): counts[k] / shots
        for k in np.flatnonzero(counts)
    }
    return OutcomeDistribution(n, weights)
