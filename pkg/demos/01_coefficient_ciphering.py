"""Scheme I walkthrough: cipher a problem's coefficients, solve the
ciphered problem, and decode the outcome distribution.

Run:  python demos/01_coefficient_ciphering.py
"""

import numpy as np

from isingcloak import (
    IsingModel,
    argmin_distribution,
    attack_complexity1,
    brute_force,
    decrypt1,
    encrypt1,
    gen_key1,
    recover_energy1,
)

rng = np.random.default_rng(7)

# A small problem the client wants solved but not disclosed.
model = IsingModel(
    n=4,
    h=(0.5, -1.0, 0.0, 2.0),
    J={(0, 1): 1.0, (1, 2): -2.0, (2, 3): 1.5},
    offset=3.0,
)
truth = brute_force(model)
print("original ground states:", sorted(truth.argmin_set))
print("original global minimum:", truth.global_min)
print("original spectral gap:", truth.gap)

# The key is a secret set of qubits to flip plus a stretch factor.
key = gen_key1(model.n, rng)
print("\nsecret targets:", sorted(key.targets), " stretch factor: %.3f" % key.tau)

encrypted = encrypt1(model, key)
print("ciphered h:", [round(v, 3) for v in encrypted.h])
print("ciphered J:", {k: round(v, 3) for k, v in encrypted.J.items()})
print("server-visible offset:", encrypted.offset)

# The server solves the ciphered problem.  Its spectrum is the original
# spectrum (minus the private offset) stretched by tau, so the gap only
# widens and nothing about the ordering changes.
served = brute_force(encrypted)
print("\nciphered gap / original gap = %.3f (tau = %.3f)" % (served.gap / truth.gap, key.tau))

# Decoding just toggles the secret bits of every measured outcome.
decoded = decrypt1(argmin_distribution(served), key)
print("decoded ground states:", sorted(decoded.support))
assert decoded.support == truth.argmin_set

# Energies map back through the inverse affine transform.
recovered = recover_energy1(served.global_min, key, model.offset)
print("recovered global minimum: %.6f" % recovered)

print("\nan observer guessing the flip set faces 2^n candidates:")
print("attack complexity (log2):", attack_complexity1(model.n))
