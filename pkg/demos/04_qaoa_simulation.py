"""Toy QAOA walkthrough: exact statevector layers, derivative-free
parameter tuning, shot sampling, and the AR/RAR quality metrics.

Run:  python demos/04_qaoa_simulation.py
"""

import numpy as np

from isingcloak import (
    IsingModel,
    QaoaParams,
    ar,
    brute_force,
    expectation,
    generate,
    optimize,
    rar,
    sample,
    simulate,
)

# One antiferromagnetic edge: small enough that the p=1 landscape has
# the closed form  <f> = sin(4*beta) * sin(2*gamma).
edge = IsingModel(2, (0.0, 0.0), {(0, 1): 1.0})
print("p=0 expectation (uniform superposition):", expectation(edge, QaoaParams((), ())))
print("closed-form optimum at (gamma, beta) = (pi/4, -pi/8):",
      round(expectation(edge, QaoaParams((np.pi / 4,), (-np.pi / 8,))), 9))

params, trace = optimize(edge, p=1, max_iters=200, rng=np.random.default_rng(1))
print("optimizer reached %.6f in %d evaluations" % (trace[-1], len(trace)))

state = simulate(edge, params)
dist = sample(state, shots=10_000, rng=np.random.default_rng(2))
print("sampled outcomes:", {b: round(w, 3) for b, w in sorted(dist.weights.items())})

gmin = brute_force(edge).global_min
print("AR  =", round(ar(dist, edge, gmin), 4))
print("RAR =", round(rar(dist, edge, gmin, k=2), 4), "(top 2 outcomes, renormalized)")

# The same machinery on a bigger instance.
model = generate("regular3", 8, np.random.default_rng(5))
truth = brute_force(model)
params, trace = optimize(model, p=2, max_iters=400, rng=np.random.default_rng(6))
dist = sample(simulate(model, params), shots=10_000, rng=np.random.default_rng(7))
print("\n8-node 3-regular instance, p=2:")
print("  global minimum:", truth.global_min)
print("  tuned expectation: %.4f" % trace[-1])
print("  AR  = %.4f" % ar(dist, model, truth.global_min))
print("  RAR = %.4f (k=5)" % rar(dist, model, truth.global_min, k=5))
