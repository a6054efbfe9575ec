"""
Whether positive steady states exist can depend on the rates
============================================================

A one-species network with three reactions: the positive root of the
steady-state polynomial appears or vanishes as the rate constants move.
"""

import numpy as np

import smallcrn as sc

net = sc.parse_network("A -> 2A\nA -> 0\n2A -> A")
(f,) = sc.steady_state_polynomials(net)
print(f.format(net.species_names))

# f = A*(k1 - k2 - k3*A), so a positive root exists exactly when k1 > k2
for rates in [(2.0, 1.0, 1.0), (1.0, 2.0, 1.0), (5.0, 1.0, 0.5)]:
    x = sc.find_positive_steady_state(net, rates)
    expected = (rates[0] - rates[1]) / rates[2]
    print(rates, None if x is None else float(x[0]), expected if expected > 0 else None)

# a seeded sweep: the fraction of draws with a witness
cfg = sc.OracleConfig(seed=7)
hits = [sc.find_positive_steady_state(net, sc.sample_rates(3, cfg, d)) is not None for d in range(200)]
print("nonempty in", np.mean(hits), "of seeded draws")
