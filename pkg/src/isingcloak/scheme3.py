"""Scheme III: regularize the problem graph with algorithmically placed decoys.

Instead of scattering a user-chosen number of decoy variables, this
scheme computes the smallest decoy count m for which the problem graph
can be completed to a d*-regular graph by joining decoys to primaries
and to each other (never adding a primary-primary edge), then routes
the resulting decoy edge set through the scheme-II weighting,
permutation and ciphering machinery.  Feasibility of a given m follows
from four arithmetic conditions on the degree deficiencies.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .core import IsingModel, OutcomeDistribution, QuboModel, ising_to_qubo, problem_graph
from .scheme1 import KeyI, key1_from_dict, key1_to_dict
from .scheme2 import (
    DecoyPlacement,
    _permute_convert_cipher,
    attack_complexity2,
    build_roulette,
    decrypt2,
    sample_weight,
)
from .util import as_rng


@dataclass(frozen=True)
class RegularizationPlan:
    """Decoy edges that complete a graph to d*-regular.

    ``deficiencies`` are the per-primary-node values d* - d_i and
    ``total_deficiency`` their sum; ``decoy_edges`` are unordered pairs
    over 0..n+m-1, each touching at least one decoy node (indices >= n).
    """

    d_star: int
    m: int
    deficiencies: tuple
    total_deficiency: int
    decoy_edges: tuple


@dataclass(frozen=True)
class KeyIII:
    """Scheme-II key shape plus the target degree d*."""

    n: int
    m: int
    perm: tuple
    key1: KeyI
    offset: float
    d_star: int

    def __post_init__(self):
        perm = tuple(int(p) for p in self.perm)
        size = self.n + self.m
        if sorted(perm) != list(range(size)):
            raise ValueError("perm must be a bijection on 0..n+m-1")
        if self.key1.n != size:
            raise ValueError("inner scheme I key must cover all n+m variables")
        object.__setattr__(self, "perm", perm)
        object.__setattr__(self, "offset", float(self.offset))


def check_conditions(n: int, m: int, d_star: int, s: int, max_e: int) -> bool:
    """Whether m decoys suffice to make the graph d*-regular.

    All four conditions are evaluated in exact integer arithmetic:
    m*d* >= s, m^2 - (d*+1)*m + s >= 0, m >= max(e_i), and (m+n)*d*
    even.
    """
    if m * d_star < s:
        return False
    if m * m - (d_star + 1) * m + s < 0:
        return False
    if m < max_e:
        return False
    if ((m + n) * d_star) % 2 != 0:
        return False
    return True


def minimal_decoy_count(degrees: Sequence[int], d_star: int, m_min: int = 0) -> int:
    """Smallest feasible decoy count, by ascending linear search.

    The search runs from m_min to n + d* + 1; exhausting that range
    without a feasible m signals a conditions bug, not a user error.
    """
    degrees = [int(d) for d in degrees]
    n = len(degrees)
    if d_star < max(degrees):
        raise ValueError(f"d_star={d_star} is below the maximum degree {max(degrees)}")
    deficiencies = [d_star - d for d in degrees]
    s = sum(deficiencies)
    max_e = max(deficiencies) if deficiencies else 0
    for m in range(m_min, n + d_star + 2):
        if check_conditions(n, m, d_star, s, max_e):
            return m
    raise RuntimeError(
        f"no feasible decoy count in [{m_min}, {n + d_star + 1}] for d_star={d_star}"
    )


def regular_edge_set(degrees: Sequence[int], d_star: int, m: int, rng=None) -> RegularizationPlan:
    """Greedy decoy-edge placement achieving d*-regularity.

    Primaries are processed by descending deficiency (ties to the
    lowest index); each receives its full quota of links from the
    decoys with the most remaining capacity.  Phase 2 then satisfies
    the highest-deficiency decoy in full against the next-highest
    non-adjacent decoys until every decoy reaches d*.  Both phases keep
    the decoy loads balanced, which makes the construction complete
    whenever the feasibility conditions hold.  Fully deterministic;
    ``rng`` is accepted for interface parity and ignored.  Regularity
    is asserted after construction, so an infeasible input surfaces as
    a hard error.
    """
    degrees = [int(d) for d in degrees]
    n = len(degrees)
    deficiencies = [d_star - d for d in degrees]
    if any(e < 0 for e in deficiencies):
        raise ValueError("d_star must be at least the maximum primary degree")
    s = sum(deficiencies)
    max_e = max(deficiencies) if deficiencies else 0
    if not check_conditions(n, m, d_star, s, max_e):
        raise ValueError(f"m={m} fails the regularization conditions for d_star={d_star}")

    decoy_need = [d_star] * m
    edges = set()

    # phase 1: satisfy each primary deficiency in full against the
    # decoys with the most remaining capacity.  Batching per primary
    # keeps the decoy capacities within one of each other, which
    # guarantees the leftover decoy deficiencies form a graphical
    # sequence for phase 2
    for pi in sorted(range(n), key=lambda i: (-deficiencies[i], i)):
        need = deficiencies[pi]
        if need == 0:
            continue
        ranked = sorted(
            (dj for dj in range(m) if decoy_need[dj] > 0),
            key=lambda dj: (-decoy_need[dj], dj),
        )
        if len(ranked) < need:
            raise RuntimeError("decoy placement stalled with unmet primary deficiencies")
        for dj in ranked[:need]:
            edges.add((pi, n + dj))
            decoy_need[dj] -= 1

    # phase 2: decoy-decoy links until every decoy reaches d*.  The
    # highest-deficiency decoy is satisfied in full against the
    # next-highest-deficiency non-adjacent decoys (Havel-Hakimi order),
    # which completes whenever the remaining sequence is graphical;
    # pairing one edge at a time between the top two can wedge itself
    # even on feasible inputs
    while any(e > 0 for e in decoy_need):
        u = max((dj for dj in range(m) if decoy_need[dj] > 0), key=lambda dj: (decoy_need[dj], -dj))
        partners = sorted(
            (
                v
                for v in range(m)
                if v != u and decoy_need[v] > 0 and (n + min(u, v), n + max(u, v)) not in edges
            ),
            key=lambda v: (-decoy_need[v], v),
        )
        if len(partners) < decoy_need[u]:
            raise RuntimeError("decoy placement stalled with unmet decoy deficiencies")
        for v in partners[: decoy_need[u]]:
            edges.add((n + min(u, v), n + max(u, v)))
            decoy_need[v] -= 1
        decoy_need[u] = 0

    final = list(degrees) + [0] * m
    for u, v in edges:
        final[u] += 1
        final[v] += 1
    if any(d != d_star for d in final):
        raise RuntimeError("regularization produced a non-regular graph")
    return RegularizationPlan(
        d_star=d_star,
        m=m,
        deficiencies=tuple(deficiencies),
        total_deficiency=s,
        decoy_edges=tuple(sorted(edges)),
    )


def _placement_from_plan(plan: RegularizationPlan, n: int, wheel, rng) -> DecoyPlacement:
    # weights drawn in sorted edge order, then one diagonal (linear)
    # term per decoy so decoys carry plausible h values after conversion
    B = {}
    C = {}
    for u, v in plan.decoy_edges:
        if u < n <= v:
            B[(u, v - n)] = sample_weight(wheel, rng)
        else:
            C[(u - n, v - n)] = sample_weight(wheel, rng)
    for j in range(plan.m):
        C[(j, j)] = sample_weight(wheel, rng)
    return DecoyPlacement(B, C)


def encrypt3(model: IsingModel, rng=None, d_star: int | None = None, bins: int = 10, mode: str = "inverse"):
    """Full scheme-III encryption of an Ising problem.

    d* defaults to the maximum primary degree (minimizing the decoy
    count).  The minimal m is computed, decoy edges are placed to make
    the graph d*-regular, weights come from the scheme-II roulette
    wheel, and the permutation / conversion / cipher tail is identical
    to scheme II.
    """
    rng = as_rng(rng)
    graph = problem_graph(model)
    max_deg = max(graph.degrees)
    if d_star is None:
        d_star = max_deg
    elif d_star < max_deg:
        raise ValueError(f"d_star={d_star} is below the maximum primary degree {max_deg}")
    m = minimal_decoy_count(graph.degrees, d_star)
    plan = regular_edge_set(graph.degrees, d_star, m)
    q = ising_to_qubo(model)
    if m > 0:
        wheel = build_roulette(list(q.A.values()), bins=bins, mode=mode)
        placement = _placement_from_plan(plan, model.n, wheel, rng)
        A = dict(q.A)
        for (r, j), w in placement.B_entries.items():
            A[(r, model.n + j)] = w
        for (i2, j), w in placement.C_entries.items():
            A[(model.n + i2, model.n + j)] = w
        aug = QuboModel(model.n + m, A, q.offset)
    else:
        aug = q
    encrypted, perm, key1 = _permute_convert_cipher(aug, rng)
    key = KeyIII(n=model.n, m=m, perm=perm, key1=key1, offset=model.offset, d_star=d_star)
    return encrypted, key


def decrypt3(dist: OutcomeDistribution, key: KeyIII) -> OutcomeDistribution:
    """Identical reversal to scheme II (d* plays no role in decoding)."""
    return decrypt2(dist, key)


def attack_complexity3(n: int, m: int) -> float:
    """Same cost model as scheme II."""
    return attack_complexity2(n, m)


def key3_to_dict(key: KeyIII) -> dict:
    return {
        "scheme": "III",
        "n": key.n,
        "m": key.m,
        "perm": list(key.perm),
        "key1": key1_to_dict(key.key1),
        "offset": key.offset,
        "d_star": key.d_star,
    }


def key3_from_dict(data: Mapping) -> KeyIII:
    if data.get("scheme") != "III":
        raise ValueError(f"expected a scheme III key, got {data.get('scheme')!r}")
    try:
        return KeyIII(
            n=int(data["n"]),
            m=int(data["m"]),
            perm=tuple(int(p) for p in data["perm"]),
            key1=key1_from_dict(data["key1"]),
            offset=float(data["offset"]),
            d_star=int(data["d_star"]),
        )
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed scheme III key: {exc}") from exc
