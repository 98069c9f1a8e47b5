"""Exact brute-force solving and solution-quality metrics.

Everything here enumerates the full configuration space, so it is the
ground truth the obfuscation schemes are verified against.  The hard
problem-size cap is n <= 24.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import IsingModel, Model, OutcomeDistribution, eval_ising, eval_qubo
from .util import bitstring_to_array, index_to_bitstring

BRUTE_FORCE_CAP = 24


@dataclass(frozen=True)
class SpectrumReport:
    """Exhaustive spectrum of a model.

    ``energies`` holds all 2^n energies in ascending order;
    ``argmin_set`` the bitstrings attaining the global minimum; ``gap``
    the distance from the ground energy to the first strictly higher
    level (+inf for a flat spectrum).  Levels closer than a relative
    degeneracy tolerance are treated as equal, since scaled or converted
    models reproduce exact ties only up to roundoff.
    """

    n: int
    energies: np.ndarray
    argmin_set: frozenset
    global_min: float
    gap: float


def energy_table(model: Model, include_offset: bool = True) -> np.ndarray:
    """Energies of all 2^n configurations, indexed by bit pattern.

    Index k corresponds to the configuration whose variable i is bit i
    of k (spin -1 for bit 0 under the Ising convention).  Term order
    matches the scalar evaluators, so table entries are bit-identical
    to per-configuration calls.
    """
    n = model.n
    if n > BRUTE_FORCE_CAP:
        raise ValueError(f"n={n} exceeds the enumeration cap of {BRUTE_FORCE_CAP}")
    size = 1 << n
    idx = np.arange(size, dtype=np.uint32)

    def bit(i):
        return ((idx >> np.uint32(i)) & np.uint32(1)).astype(np.float64)

    e = np.zeros(size)
    if isinstance(model, IsingModel):
        for i, hi in enumerate(model.h):
            if hi != 0.0:
                e += hi * (2.0 * bit(i) - 1.0)
        for (i, j), v in model.J.items():
            e += v * ((2.0 * bit(i) - 1.0) * (2.0 * bit(j) - 1.0))
    else:
        for (i, _), v in model.diagonal_items():
            e += v * bit(i)
        for (i, j), v in model.offdiagonal_items():
            e += v * (bit(i) * bit(j))
    if include_offset:
        e += model.offset
    return e


def brute_force(model: Model, degeneracy_tol: float = 1e-9) -> SpectrumReport:
    """Exhaustively enumerate a model and report its exact spectrum."""
    energies = energy_table(model)
    order = np.sort(energies)
    gmin = float(order[0])
    tol = degeneracy_tol * max(1.0, float(np.abs(energies).max()))
    ground = np.flatnonzero(energies <= gmin + tol)
    argmin_set = frozenset(index_to_bitstring(int(k), model.n) for k in ground)
    above = order[order > gmin + tol]
    gap = float(above[0] - gmin) if above.size else math.inf
    return SpectrumReport(model.n, order, argmin_set, gmin, gap)


def argmin_distribution(report: SpectrumReport) -> OutcomeDistribution:
    """Uniform distribution over the ground-state bitstrings."""
    w = 1.0 / len(report.argmin_set)
    return OutcomeDistribution(report.n, {b: w for b in report.argmin_set})


def _outcome_energy(model: Model, bits: str) -> float:
    x = bitstring_to_array(bits)
    if isinstance(model, IsingModel):
        return eval_ising(model, 2 * x.astype(np.int64) - 1)
    return eval_qubo(model, x)


def _top_k_expectation(dist: OutcomeDistribution, model: Model, k: int) -> float:
    # rank by weight desc, then energy asc, then bitstring; the
    # expectation is normalized by the selected weight so the full-k
    # case coincides bitwise with the unrestricted metric
    ranked = sorted(
        ((w, _outcome_energy(model, b), b) for b, w in dist.weights.items()),
        key=lambda t: (-t[0], t[1], t[2]),
    )
    chosen = ranked[: min(k, len(ranked))]
    num = 0.0
    den = 0.0
    for w, e, _ in chosen:
        num += w * e
        den += w
    if den <= 0.0:
        raise ValueError("selected outcomes carry zero total weight")
    return num / den


def ar(dist: OutcomeDistribution, model: Model, global_min: float) -> float:
    """Approximation ratio: expected energy divided by the global minimum.

    At most 1 for models with a negative global minimum; higher is
    better.
    """
    if global_min == 0.0:
        raise ValueError("approximation ratio is undefined for a zero global minimum")
    if not dist.is_normalized:
        raise ValueError("distribution must be normalized")
    return _top_k_expectation(dist, model, len(dist.weights)) / global_min


def rar(dist: OutcomeDistribution, model: Model, global_min: float, k: int = 5) -> float:
    """Restricted approximation ratio over the k most probable outcomes.

    The k highest-weight outcomes (ties broken by lower energy, then
    lexicographic bitstring) are renormalized before taking the
    expectation.  With k covering the whole support this equals
    :func:`ar` exactly.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    if global_min == 0.0:
        raise ValueError("restricted approximation ratio is undefined for a zero global minimum")
    if not dist.is_normalized:
        raise ValueError("distribution must be normalized")
    return _top_k_expectation(dist, model, k) / global_min
