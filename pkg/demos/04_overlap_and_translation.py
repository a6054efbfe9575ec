"""
Adding the same complex to every reaction
=========================================

Translating a network by a complex multiplies every polynomial by the
matching monomial.  On the positive orthant that factor is harmless, so
the steady states do not move.
"""

import smallcrn as sc

net = sc.parse_network("A -> 2B\n2B -> A")
shifted = sc.translate_network(net, sc.Complex((2, 1)))
print(sc.serialize(shifted))

polys = sc.steady_state_polynomials(shifted)
common, rest = sc.factor_common_monomial(polys)
print("common monomial", common.format(net.species_names))
for p in rest:
    print("  ", p.format(net.species_names))

shared, reduced = sc.reduced_reactants(shifted)
print("shared reactant part", shared.format(net.species_names))
print("reduced reactants", [c.format(net.species_names) for c in reduced])

# same binomial either way; the reactant rules only see disjoint supports
# in the original, so the two routes differ on the translated network
for n in (net, shifted):
    b = sc.canonical_binomial(n)
    print(b.u, b.q, sc.classify_by_reactants(n), sc.classify_by_binomial(b))

rates = (1.5, 0.25)
print(sc.find_positive_steady_state(net, rates), sc.find_positive_steady_state(shifted, rates))
