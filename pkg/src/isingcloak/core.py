"""Problem representations and exact transformations between them.

Two equivalent quadratic forms are supported:

* :class:`IsingModel` over spin variables z_i in {-1, +1} with linear
  coefficients h, sparse pair couplings J and a constant offset,
* :class:`QuboModel` over binary variables x_i in {0, 1} with a sparse
  upper-triangular coefficient map A (diagonal entries are the linear
  terms) and a constant offset.

The conversion between them uses the affine map z = 2x - 1:

    A_ii      = 2 h_i - 2 * sum_{j != i} J_ij
    A_ij      = 4 J_ij                       (i < j)
    offset_x  = offset_z - sum_i h_i + sum_{i<j} J_ij

which makes the two energy functions agree pointwise under x = (z+1)/2.

Energies are summed in a fixed order (linear terms by ascending index,
then quadratic terms by ascending pair, then the offset) so results are
bit-reproducible.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Mapping, Sequence, Union

import numpy as np

from .util import validate_bitstring


def _check_spins(z: Sequence[int], n: int) -> np.ndarray:
    z = np.asarray(z)
    if z.shape != (n,):
        raise ValueError(f"configuration length {z.shape} does not match n={n}")
    if not np.all(np.isin(z, (-1, 1))):
        raise ValueError("spin values must be -1 or +1")
    return z.astype(np.float64)


def _check_bits(x: Sequence[int], n: int) -> np.ndarray:
    x = np.asarray(x)
    if x.shape != (n,):
        raise ValueError(f"configuration length {x.shape} does not match n={n}")
    if not np.all(np.isin(x, (0, 1))):
        raise ValueError("binary values must be 0 or 1")
    return x.astype(np.float64)


@dataclass(frozen=True)
class IsingModel:
    """Quadratic spin model  f(z) = sum_i h_i z_i + sum_{i<j} J_ij z_i z_j + offset.

    Parameters
    ----------
    n : int
        Number of spin variables.
    h : sequence of float
        Dense linear coefficients, length n.
    J : mapping (i, j) -> float
        Pair couplings with 0 <= i < j < n.  Zero couplings must be
        absent rather than stored.
    offset : float
        Constant energy shift.  Kept client-side by the obfuscation
        schemes; never disclosed to a solver.
    """

    n: int
    h: tuple
    J: dict
    offset: float = 0.0

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise ValueError("n must be a positive integer")
        h = tuple(float(v) for v in self.h)
        if len(h) != self.n:
            raise ValueError(f"h has length {len(h)}, expected n={self.n}")
        if not all(np.isfinite(h)):
            raise ValueError("h contains non-finite values")
        J = {}
        for key in sorted(self.J):
            i, j = key
            if not (0 <= i < j < self.n):
                raise ValueError(f"pair {key} is not 0 <= i < j < n")
            v = float(self.J[key])
            if v == 0.0:
                raise ValueError(f"pair {key} stores an exact zero (omit it instead)")
            if not np.isfinite(v):
                raise ValueError(f"pair {key} has a non-finite coupling")
            J[(int(i), int(j))] = v
        object.__setattr__(self, "h", h)
        object.__setattr__(self, "J", J)
        object.__setattr__(self, "offset", float(self.offset))


@dataclass(frozen=True)
class QuboModel:
    """Quadratic binary model  g(x) = sum_i A_ii x_i + sum_{i<j} A_ij x_i x_j + offset.

    Only upper-triangular-or-diagonal keys (i <= j) may be stored;
    absent entries are zero.
    """

    n: int
    A: dict
    offset: float = 0.0

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise ValueError("n must be a positive integer")
        A = {}
        for key in sorted(self.A):
            i, j = key
            if not (0 <= i <= j < self.n):
                raise ValueError(f"key {key} is not 0 <= i <= j < n")
            v = float(self.A[key])
            if v == 0.0:
                raise ValueError(f"key {key} stores an exact zero (omit it instead)")
            if not np.isfinite(v):
                raise ValueError(f"key {key} has a non-finite coefficient")
            A[(int(i), int(j))] = v
        object.__setattr__(self, "A", A)
        object.__setattr__(self, "offset", float(self.offset))

    def diagonal_items(self):
        return [(k, v) for k, v in self.A.items() if k[0] == k[1]]

    def offdiagonal_items(self):
        return [(k, v) for k, v in self.A.items() if k[0] != k[1]]


@dataclass(frozen=True)
class ProblemGraph:
    """Graph view of a model: nodes are variables, edges the quadratic support."""

    n: int
    edges: tuple
    degrees: tuple


@dataclass(frozen=True)
class OutcomeDistribution:
    """Map from measured bitstrings to nonnegative weights.

    All bitstrings must share length ``n``.  A distribution is
    considered normalized when its total weight is within 1e-9 of 1.
    """

    n: int
    weights: dict

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise ValueError("n must be a positive integer")
        weights = {}
        for bits in sorted(self.weights):
            validate_bitstring(bits, self.n)
            w = float(self.weights[bits])
            if not np.isfinite(w) or w < 0.0:
                raise ValueError(f"weight for {bits!r} must be finite and nonnegative")
            weights[bits] = w
        object.__setattr__(self, "weights", weights)

    @property
    def total(self) -> float:
        return float(sum(self.weights.values()))

    @property
    def is_normalized(self) -> bool:
        return abs(self.total - 1.0) <= 1e-9

    def normalized(self) -> "OutcomeDistribution":
        t = self.total
        if t <= 0.0:
            raise ValueError("cannot normalize a distribution with zero total weight")
        return OutcomeDistribution(self.n, {b: w / t for b, w in self.weights.items()})

    @property
    def support(self) -> frozenset:
        return frozenset(b for b, w in self.weights.items() if w > 0.0)


Model = Union[IsingModel, QuboModel]


def eval_ising(model: IsingModel, z: Sequence[int]) -> float:
    """Energy of a spin configuration under ``model``.

    Summation order is fixed: h terms by ascending index, J terms by
    ascending pair, then the offset.
    """
    zz = _check_spins(z, model.n)
    e = 0.0
    for i, hi in enumerate(model.h):
        if hi != 0.0:
            e += hi * zz[i]
    for (i, j), v in model.J.items():
        e += v * zz[i] * zz[j]
    return float(e + model.offset)


def eval_qubo(model: QuboModel, x: Sequence[int]) -> float:
    """Energy of a binary configuration under ``model``.

    Summation order: diagonal terms by ascending index, off-diagonal
    terms by ascending pair, then the offset.
    """
    xx = _check_bits(x, model.n)
    e = 0.0
    for (i, _), v in model.diagonal_items():
        e += v * xx[i]
    for (i, j), v in model.offdiagonal_items():
        e += v * xx[i] * xx[j]
    return float(e + model.offset)


def _coupling_row_sums(model: IsingModel) -> np.ndarray:
    # per-endpoint accumulation in ascending pair order; qubo_to_ising
    # accumulates in the same order so the round trip cancels exactly
    sums = np.zeros(model.n)
    for (i, j), v in model.J.items():
        sums[i] += v
        sums[j] += v
    return sums


def ising_to_qubo(model: IsingModel) -> QuboModel:
    """Equivalent binary model under z = 2x - 1.

    For every z and x = (z + 1) / 2 the two energies agree.
    """
    row = _coupling_row_sums(model)
    A = {}
    for i in range(model.n):
        v = 2.0 * model.h[i] - 2.0 * row[i]
        if v != 0.0:
            A[(i, i)] = v
    for (i, j), v in model.J.items():
        A[(i, j)] = 4.0 * v
    offset = model.offset - sum(model.h) + sum(model.J.values())
    return QuboModel(model.n, A, offset)


def qubo_to_ising(model: QuboModel) -> IsingModel:
    """Exact inverse of :func:`ising_to_qubo`."""
    J = {}
    acc = np.zeros(model.n)
    for (i, j), v in model.offdiagonal_items():
        J[(i, j)] = v / 4.0
        acc[i] += v / 4.0
        acc[j] += v / 4.0
    diag = dict(model.diagonal_items())
    h = []
    for i in range(model.n):
        h.append(diag.get((i, i), 0.0) / 2.0 + acc[i])
    offset = model.offset + sum(h) - sum(J.values())
    return IsingModel(model.n, tuple(h), J, offset)


def problem_graph(model: Model) -> ProblemGraph:
    """Graph whose edge set is the support of the quadratic terms."""
    if isinstance(model, IsingModel):
        pairs = list(model.J)
    else:
        pairs = [k for k, _ in model.offdiagonal_items()]
    degrees = [0] * model.n
    for i, j in pairs:
        degrees[i] += 1
        degrees[j] += 1
    return ProblemGraph(model.n, tuple(sorted(pairs)), tuple(degrees))


# ---------------------------------------------------------------------------
# JSON serialization
# ---------------------------------------------------------------------------
# IsingModel: {"n": int, "h": [float], "J": [[i, j, v]], "offset": float}
# QuboModel:  {"n": int, "A": [[i, j, v]], "offset": float}
# OutcomeDistribution: {"n": int, "counts": {bitstring: weight}}
# Pair lists are sorted lexicographically; field order is fixed.


def ising_to_dict(model: IsingModel) -> dict:
    return {
        "n": model.n,
        "h": list(model.h),
        "J": [[i, j, v] for (i, j), v in sorted(model.J.items())],
        "offset": model.offset,
    }


def ising_from_dict(data: Mapping) -> IsingModel:
    try:
        return IsingModel(
            n=int(data["n"]),
            h=tuple(float(v) for v in data["h"]),
            J={(int(i), int(j)): float(v) for i, j, v in data["J"]},
            offset=float(data["offset"]),
        )
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed Ising model record: {exc}") from exc


def qubo_to_dict(model: QuboModel) -> dict:
    return {
        "n": model.n,
        "A": [[i, j, v] for (i, j), v in sorted(model.A.items())],
        "offset": model.offset,
    }


def qubo_from_dict(data: Mapping) -> QuboModel:
    try:
        return QuboModel(
            n=int(data["n"]),
            A={(int(i), int(j)): float(v) for i, j, v in data["A"]},
            offset=float(data["offset"]),
        )
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed QUBO model record: {exc}") from exc


def distribution_to_dict(dist: OutcomeDistribution) -> dict:
    return {"n": dist.n, "counts": {b: w for b, w in sorted(dist.weights.items())}}


def distribution_from_dict(data: Mapping) -> OutcomeDistribution:
    try:
        return OutcomeDistribution(
            n=int(data["n"]),
            weights={str(b): float(w) for b, w in data["counts"].items()},
        )
    except (KeyError, TypeError, AttributeError) as exc:
        raise ValueError(f"malformed distribution record: {exc}") from exc


def dumps(payload: dict) -> str:
    """Canonical JSON encoding: fixed field order, two-space indent."""
    return json.dumps(payload, indent=2) + "\n"
