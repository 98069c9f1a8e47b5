"""Client-side obfuscation of Ising/QUBO problems for untrusted solvers.

Three schemes of increasing strength hide an optimization problem
before it is delegated: scheme I ciphers coefficient signs and scale,
scheme II additionally embeds decoy variables behind a permutation, and
scheme III places exactly enough decoys to make the problem graph
regular.  Each scheme guarantees the original optimum is recoverable
from the solver's outcome distribution, which the exact brute-force
oracle and the bundled QAOA statevector simulator verify end to end.
"""

from .benchmarks import FAMILIES, generate
from .core import (
    IsingModel,
    OutcomeDistribution,
    ProblemGraph,
    QuboModel,
    eval_ising,
    eval_qubo,
    ising_from_dict,
    ising_to_dict,
    ising_to_qubo,
    problem_graph,
    qubo_from_dict,
    qubo_to_dict,
    qubo_to_ising,
)
from .oracle import SpectrumReport, ar, argmin_distribution, brute_force, energy_table, rar
from .qaoa import QaoaParams, expectation, optimize, sample, simulate
from .scheme1 import (
    KeyI,
    attack_complexity1,
    decrypt1,
    encrypt1,
    flip_spins,
    gen_key1,
    recover_energy1,
)
from .scheme2 import (
    DecoyPlacement,
    KeyII,
    RouletteWheel,
    apply_permutation,
    attack_complexity2,
    build_roulette,
    decrypt2,
    embed_decoys,
    encrypt2,
    gen_permutation,
    invert_permutation,
    sample_weight,
)
from .scheme3 import (
    KeyIII,
    RegularizationPlan,
    attack_complexity3,
    check_conditions,
    decrypt3,
    encrypt3,
    minimal_decoy_count,
    regular_edge_set,
)

__version__ = "0.1.0"

__all__ = [
    "FAMILIES",
    "IsingModel",
    "QuboModel",
    "ProblemGraph",
    "OutcomeDistribution",
    "SpectrumReport",
    "QaoaParams",
    "KeyI",
    "KeyII",
    "KeyIII",
    "RouletteWheel",
    "DecoyPlacement",
    "RegularizationPlan",
    "eval_ising",
    "eval_qubo",
    "ising_to_qubo",
    "qubo_to_ising",
    "problem_graph",
    "ising_to_dict",
    "ising_from_dict",
    "qubo_to_dict",
    "qubo_from_dict",
    "gen_key1",
    "encrypt1",
    "decrypt1",
    "flip_spins",
    "recover_energy1",
    "attack_complexity1",
    "build_roulette",
    "sample_weight",
    "embed_decoys",
    "gen_permutation",
    "invert_permutation",
    "apply_permutation",
    "encrypt2",
    "decrypt2",
    "attack_complexity2",
    "check_conditions",
    "minimal_decoy_count",
    "regular_edge_set",
    "encrypt3",
    "decrypt3",
    "attack_complexity3",
    "energy_table",
    "brute_force",
    "argmin_distribution",
    "ar",
    "rar",
    "simulate",
    "expectation",
    "optimize",
    "sample",
    "generate",
]
