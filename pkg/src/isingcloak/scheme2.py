"""Scheme II: decoy-variable embedding behind a variable permutation.

The pipeline converts the Ising problem to QUBO form, appends m decoy
binary variables whose couplings are drawn from a roulette wheel built
over the existing coefficient magnitudes, permutes all n+m variables,
converts back to Ising form, and finally applies the scheme-I cipher.

Recovery rests on the decoy coupling signs: every primary-to-decoy
weight is strictly positive and every decoy-block weight nonnegative,
so for any binary (x, y) the augmented energy is the original energy at
x plus nonnegative terms, with equality at y = 0.  Every global
minimizer of the augmented problem therefore projects onto a global
minimizer of the original problem, and decryption simply reverses the
cipher, the permutation and the projection.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Mapping, Sequence

import numpy as np

from .core import IsingModel, OutcomeDistribution, QuboModel, ising_to_qubo, qubo_to_ising
from .scheme1 import KeyI, decrypt1, encrypt1, gen_key1, key1_from_dict, key1_to_dict
from .util import as_rng


@dataclass(frozen=True)
class RouletteWheel:
    """Binned sampler over the magnitude range of existing coefficients.

    ``bin_edges`` are b+1 ascending reals; ``sector_weights`` the b
    selection weights.  ``mode`` records whether sampling preserves the
    observed magnitude histogram or inverts it to flatten the combined
    coefficient distribution.
    """

    bin_edges: tuple
    sector_weights: tuple
    mode: str

    def __post_init__(self):
        edges = tuple(float(e) for e in self.bin_edges)
        weights = tuple(float(w) for w in self.sector_weights)
        if len(edges) != len(weights) + 1 or len(weights) < 1:
            raise ValueError("bin_edges must have exactly one more entry than sector_weights")
        if any(b >= a for a, b in zip(edges[1:], edges[:-1])):
            raise ValueError("bin_edges must be strictly ascending")
        if any(w < 0.0 for w in weights) or sum(weights) <= 0.0:
            raise ValueError("sector weights must be nonnegative with a positive sum")
        if self.mode not in ("preserve", "inverse"):
            raise ValueError(f"unknown roulette mode {self.mode!r}")
        object.__setattr__(self, "bin_edges", edges)
        object.__setattr__(self, "sector_weights", weights)


@dataclass(frozen=True)
class DecoyPlacement:
    """Where the decoy couplings landed.

    ``B_entries`` maps (primary index, decoy column) to the strictly
    positive primary-to-decoy weight; ``C_entries`` maps decoy-block
    cells (i <= j, decoy-local indices, the diagonal being a decoy
    linear term) to nonnegative weights.
    """

    B_entries: dict
    C_entries: dict

    def __post_init__(self):
        B = {}
        for key in sorted(self.B_entries):
            v = float(self.B_entries[key])
            if v <= 0.0:
                raise ValueError(f"primary-decoy weight at {key} must be strictly positive")
            B[key] = v
        C = {}
        for key in sorted(self.C_entries):
            i, j = key
            if i > j:
                raise ValueError(f"decoy-block key {key} must satisfy i <= j")
            v = float(self.C_entries[key])
            if v < 0.0:
                raise ValueError(f"decoy-block weight at {key} must be nonnegative")
            C[key] = v
        object.__setattr__(self, "B_entries", B)
        object.__setattr__(self, "C_entries", C)


@dataclass(frozen=True)
class KeyII:
    """Client-secret key for scheme II.

    ``perm`` maps pre-permutation variable index i to its disclosed
    position perm[i]; ``key1`` is the scheme-I key over all n+m
    variables; ``offset`` the original client offset.
    """

    n: int
    m: int
    perm: tuple
    key1: KeyI
    offset: float = 0.0

    def __post_init__(self):
        perm = tuple(int(p) for p in self.perm)
        size = self.n + self.m
        if sorted(perm) != list(range(size)):
            raise ValueError("perm must be a bijection on 0..n+m-1")
        if self.key1.n != size:
            raise ValueError("inner scheme I key must cover all n+m variables")
        object.__setattr__(self, "perm", perm)
        object.__setattr__(self, "offset", float(self.offset))


def build_roulette(coeffs: Sequence[float], bins: int = 10, mode: str = "inverse") -> RouletteWheel:
    """Histogram the coefficient magnitudes into equal-width bins.

    ``preserve`` weights each bin by its normalized frequency, so decoy
    draws mimic the existing magnitude profile; ``inverse`` weights
    nonempty bins by the reciprocal frequency, steering draws toward
    rare magnitudes so the combined (existing + decoy) distribution
    flattens.  Empty bins get zero weight in both modes.
    """
    coeffs = np.asarray(list(coeffs), dtype=np.float64)
    if coeffs.size == 0:
        raise ValueError("cannot build a roulette wheel from an empty coefficient set")
    if bins < 1:
        raise ValueError("bins must be at least 1")
    mags = np.abs(coeffs)
    lo, hi = float(mags.min()), float(mags.max())
    if lo == hi:
        # degenerate magnitude range; widen so bins have positive width
        lo, hi = lo - 0.5, hi + 0.5
    counts, edges = np.histogram(mags, bins=bins, range=(lo, hi))
    p = counts / counts.sum()
    if mode == "preserve":
        weights = p
    elif mode == "inverse":
        weights = np.where(p > 0.0, np.divide(1.0, p, out=np.zeros_like(p), where=p > 0.0), 0.0)
    else:
        raise ValueError(f"unknown roulette mode {mode!r}")
    return RouletteWheel(tuple(edges), tuple(weights), mode)


def sample_weight(wheel: RouletteWheel, rng=None) -> float:
    """Draw one strictly positive coupling weight from the wheel.

    Picks a bin with probability proportional to its sector weight and
    samples uniformly within it; draws at or below zero (possible only
    when the lowest edge is not positive) are clamped to half the bin
    width.
    """
    rng = as_rng(rng)
    weights = np.asarray(wheel.sector_weights)
    total = weights.sum()
    if total <= 0.0:
        raise ValueError("invalid wheel: all sector weights are zero")
    k = int(rng.choice(len(weights), p=weights / total))
    lo, hi = wheel.bin_edges[k], wheel.bin_edges[k + 1]
    w = float(rng.uniform(lo, hi))
    if w <= 0.0:
        w = 0.5 * (hi - lo)
    return w


def embed_decoys(
    q: QuboModel,
    m: int,
    wheel: RouletteWheel,
    rng=None,
    kmax_out: int = 1,
    kmax_in: int = 1,
):
    """Append m decoy variables with wheel-drawn couplings.

    Decoys occupy indices n..n+m-1.  Column j receives k_out ~
    uniform{1..kmax_out} strictly positive links to distinct primary
    rows, and k_in ~ uniform{1..kmax_in} nonnegative decoy-block
    entries in column j (possibly its diagonal; the first column has
    only the diagonal available, so k_in is clamped to the cell count).
    The original coefficient block is left untouched.

    Returns the augmented model and the placement record.
    """
    if m < 1:
        raise ValueError("m must be at least 1")
    if kmax_out < 1 or kmax_in < 1:
        raise ValueError("kmax_out and kmax_in must be at least 1")
    if kmax_out > q.n:
        raise ValueError(
            f"kmax_out={kmax_out} could require more distinct primary rows than n={q.n}"
        )
    rng = as_rng(rng)
    n = q.n
    B = {}
    C = {}
    for j in range(m):
        k_out = int(rng.integers(1, kmax_out + 1))
        rows = sorted(int(r) for r in rng.choice(n, size=k_out, replace=False))
        for r in rows:
            B[(r, j)] = sample_weight(wheel, rng)
        cells = j + 1  # decoy-block column j has entries (0..j, j)
        k_in = min(int(rng.integers(1, kmax_in + 1)), cells)
        picked = sorted(int(c) for c in rng.choice(cells, size=k_in, replace=False))
        for i2 in picked:
            C[(i2, j)] = sample_weight(wheel, rng)
    placement = DecoyPlacement(B, C)
    A = dict(q.A)
    for (r, j), w in placement.B_entries.items():
        A[(r, n + j)] = w
    for (i2, j), w in placement.C_entries.items():
        A[(n + i2, n + j)] = w
    return QuboModel(n + m, A, q.offset), placement


def gen_permutation(size: int, rng=None) -> tuple:
    """Uniformly random permutation of 0..size-1 (Fisher-Yates)."""
    if size < 1:
        raise ValueError("size must be at least 1")
    rng = as_rng(rng)
    return tuple(int(p) for p in rng.permutation(size))


def invert_permutation(perm: Sequence[int]) -> tuple:
    inv = [0] * len(perm)
    for i, p in enumerate(perm):
        inv[p] = i
    return tuple(inv)


def apply_permutation(q: QuboModel, perm: Sequence[int]) -> QuboModel:
    """Relabel variables: entry (i, j) moves to (perm[i], perm[j]).

    Energies are preserved under the matching vector relabeling
    x_new[perm[i]] = x_old[i], so the full spectrum is unchanged as a
    multiset.
    """
    perm = tuple(int(p) for p in perm)
    if sorted(perm) != list(range(q.n)):
        raise ValueError(f"perm must be a bijection on 0..{q.n - 1}")
    A = {}
    for (i, j), v in q.A.items():
        a, b = perm[i], perm[j]
        A[(min(a, b), max(a, b))] = v
    return QuboModel(q.n, A, q.offset)


def permute_bits(bits: str, perm: Sequence[int]) -> str:
    """Undo a variable permutation on a measured bitstring.

    Position i of the result is the bit the disclosed problem holds at
    position perm[i].
    """
    return "".join(bits[perm[i]] for i in range(len(bits)))


def _permute_convert_cipher(aug: QuboModel, rng):
    """Shared tail of schemes II and III: permute, convert, cipher."""
    perm = gen_permutation(aug.n, rng)
    disclosed = apply_permutation(aug, perm)
    ising = qubo_to_ising(disclosed)
    key1 = gen_key1(aug.n, rng)
    return encrypt1(ising, key1), perm, key1


def encrypt2(
    model: IsingModel,
    m: int,
    rng=None,
    kmax_out: int = 1,
    kmax_in: int = 1,
    bins: int = 10,
    mode: str = "inverse",
):
    """Full scheme-II encryption of an Ising problem.

    Pipeline: Ising -> QUBO, roulette wheel over the QUBO coefficient
    values, decoy embedding, variable permutation, QUBO -> Ising, then
    the scheme-I cipher over all n+m qubits.  The returned model's
    offset is zero; the key records the permutation, decoy count, inner
    scheme-I key and the original offset.
    """
    rng = as_rng(rng)
    q = ising_to_qubo(model)
    wheel = build_roulette(list(q.A.values()), bins=bins, mode=mode)
    aug, _ = embed_decoys(q, m, wheel, rng, kmax_out=kmax_out, kmax_in=kmax_in)
    encrypted, perm, key1 = _permute_convert_cipher(aug, rng)
    key = KeyII(n=model.n, m=m, perm=perm, key1=key1, offset=model.offset)
    return encrypted, key


def decrypt2(dist: OutcomeDistribution, key) -> OutcomeDistribution:
    """Reverse the scheme-II layers on a measured distribution.

    Undoes the scheme-I bit flips, un-permutes bit positions, truncates
    to the first n (primary) bits and merges the weights of outcomes
    that collide there.  Total weight is preserved.
    """
    size = key.n + key.m
    if dist.n != size:
        raise ValueError(f"distribution has n={dist.n}, key expects n+m={size}")
    unflipped = decrypt1(dist, key.key1)
    merged = {}
    for bits, w in sorted(unflipped.weights.items()):
        primary = permute_bits(bits, key.perm)[: key.n]
        merged[primary] = merged.get(primary, 0.0) + w
    return OutcomeDistribution(key.n, merged)


def attack_complexity2(n: int, m: int) -> float:
    """log2 of (n+m) * (n+m)! * 2^(n+m), via exact integer arithmetic.

    m = 0 is accepted so already-regular scheme-III problems (which
    need no decoys but are still permuted and ciphered) can be scored.
    """
    if n < 1 or m < 0:
        raise ValueError("n must be at least 1 and m nonnegative")
    size = n + m
    return math.log2(size * math.factorial(size) * (1 << size))


def key2_to_dict(key: KeyII) -> dict:
    return {
        "scheme": "II",
        "n": key.n,
        "m": key.m,
        "perm": list(key.perm),
        "key1": key1_to_dict(key.key1),
        "offset": key.offset,
    }


def key2_from_dict(data: Mapping) -> KeyII:
    if data.get("scheme") != "II":
        raise ValueError(f"expected a scheme II key, got {data.get('scheme')!r}")
    try:
        return KeyII(
            n=int(data["n"]),
            m=int(data["m"]),
            perm=tuple(int(p) for p in data["perm"]),
            key1=key1_from_dict(data["key1"]),
            offset=float(data["offset"]),
        )
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed scheme II key: {exc}") from exc
