"""
Chains of roots and their new forms
===================================

A v-chain is a decreasing sequence of roots in ON(v).  Cutting it and, when the
tail is even, picking a diagonal point produces a shorter chain.
"""

from orthocone import IsotropicIndex, roots_of
from orthocone.chains import VChain, all_new_forms, decompose

v = IsotropicIndex.of((1, 2, 3, 4, 5))
system = roots_of(v)
print("ON(v) has", sum(1 for a in system if a.in_ON), "roots")

# Build a chain from row/column pairs.
E = VChain(tuple(system.root(r, c) for r, c in [(9, 1), (8, 2), (7, 3)]))
print("chain:", E)

# The chain splits into intertwined components.
for comp in decompose(E):
    print("component:", comp)

# Every cut-off (and every eligible diagonal choice) gives a candidate new form;
# some are undefined, and the reason is kept.
for nf in all_new_forms(E):
    choice = "" if nf.choice is None else f" choice=({nf.choice.row},{nf.choice.col})"
    body = repr(nf.chain) if nf.defined else "undefined: " + nf.reason
    print(f"cutoff={nf.cutoff}{choice}: {body}")
