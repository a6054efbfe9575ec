"""
Curves of higher degree
=======================

With trimolecular and larger reactants the variety can be a semicubical
parabola or something without a common name.  The sampled points tell
the same story as the exponents.
"""

import numpy as np

import smallcrn as sc

cases = {
    "semicubical": "3B -> A + 2B\n2A -> A + B",
    "quartic": "4A -> 3A + B\n2B -> A + B",
}
cfg = sc.OracleConfig(samples=32)

for label, text in cases.items():
    net = sc.parse_network(text)
    b = sc.canonical_binomial(net)
    rates = sc.sample_rates(2, cfg, 0, sc.network_seed(net))
    sample = sc.sample_variety(net, rates, cfg)
    # the quartic one is y**2 = c*x**4: the reactant rules do not name it,
    # but its positive part is still the parabola y = sqrt(c)*x**2
    print(label, net.species_names, "u =", b.u, "g =", b.g)
    print("  by reactants:", sc.classify_by_reactants(net))
    print("  from points: ", sc.identify_class(sample))
    # log-log slope along the curve is -u[0]/u[1]
    lx, ly = np.log(sample.points).T
    print("  slope", np.polyfit(lx, ly, 1)[0], "vs", -b.u[0] / b.u[1])
