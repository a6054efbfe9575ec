"""
A two-reaction network from end to end
======================================

Parse a network, look at its steady-state polynomials, and check the
symbolic description of its positive steady states against numbers.
"""

import numpy as np

import smallcrn as sc

net = sc.parse_network("A -> 2B\n2B -> A")
print(sc.serialize(net))

# stoichiometric and reactant matrices, species by reactions
print(sc.stoichiometric_matrix(net))
print(sc.reactant_matrix(net))

# both polynomials are multiples of k1*A - k2*B^2
for p in sc.steady_state_polynomials(net):
    print(p.format(net.species_names))

status = sc.pssv_status(net)
b = sc.canonical_binomial(net)
print(status.tag, b.u, b.q, b.g)
print(sc.classify_by_reactants(net), sc.classify_by_binomial(b))

# sample the curve at fixed rates and check every point
rates = (2.0, 0.5)
sample = sc.sample_variety(net, rates, sc.OracleConfig(samples=8))
print(np.round(sample.points, 4))
print("max normalized residual", sample.max_residual)
print("fits a parabola:", sc.verify_class(net, sample))
