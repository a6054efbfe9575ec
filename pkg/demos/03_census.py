"""
Every small network, up to relabeling
=====================================

Enumerate two-species two-reaction networks at a molecularity bound,
then count them by the shape of their positive steady-state variety.
"""

import smallcrn as sc

print(sc.enumerate_complexes(2, 2))

nets = sc.enumerate_networks(2, 2, 2)
print(len(nets), "networks")

report = sc.census(nets)
print(report.table())

# the nonempty ones, with their reactant pairs
for net in nets:
    cls = sc.classify_by_reactants(net)
    if cls not in (sc.VarietyClass.EMPTY_PSSV,):
        print(f"{cls.value:20s}", sc.canonical_key(net).replace("\n", "; "))

# raising the bound brings in cubic shapes
big = sc.census(sc.enumerate_networks(2, 2, 3))
print(big.table())
