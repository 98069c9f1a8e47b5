"""Scheme II walkthrough: hide a problem's size and structure by
embedding decoy variables behind a random permutation.

Run:  python demos/02_decoy_embedding.py
"""

import numpy as np

from isingcloak import (
    argmin_distribution,
    attack_complexity2,
    brute_force,
    build_roulette,
    decrypt2,
    embed_decoys,
    encrypt2,
    generate,
    ising_to_qubo,
    problem_graph,
)

rng = np.random.default_rng(21)

model = generate("ba2", 6, rng)
truth = brute_force(model)
print("problem: 6-node preferential-attachment graph,",
      len(problem_graph(model).edges), "edges")
print("ground states:", sorted(truth.argmin_set))

# Under the hood: the problem moves to its binary (QUBO) form, a
# roulette wheel is built over the existing coefficient magnitudes, and
# each decoy column receives strictly positive couplings.  Positivity is
# what guarantees recovery: at decoy assignment y = 0 the augmented
# energy equals the original energy, and any other y only adds weight.
q = ising_to_qubo(model)
wheel = build_roulette(list(q.A.values()), bins=10, mode="inverse")
aug, placement = embed_decoys(q, 2, wheel, np.random.default_rng(5))
print("\ndecoy couplings drawn from the wheel:")
print("  primary->decoy:", {k: round(v, 3) for k, v in placement.B_entries.items()})
print("  decoy block:   ", {k: round(v, 3) for k, v in placement.C_entries.items()})

base = np.sort(brute_force(q).energies)[:4]
lift = np.sort(brute_force(aug).energies)[:4]
print("lowest original levels: ", np.round(base, 3))
print("lowest augmented levels:", np.round(lift, 3), "(ground value unchanged)")

# The full pipeline also permutes the variables and applies the
# scheme I cipher before anything is disclosed.
encrypted, key = encrypt2(model, m=2, rng=rng)
print("\ndisclosed problem size:", encrypted.n, "(original n and m stay secret)")
print("secret permutation:", key.perm)

served = argmin_distribution(brute_force(encrypted))
decoded = decrypt2(served, key)
print("decoded ground states:", sorted(decoded.support))
assert decoded.support == truth.argmin_set

print("\nattack complexity (log2) for n=6, m=2: %.3f"
      % attack_complexity2(key.n, key.m))
