"""
Second cohomology of a finite group
===================================

H^2(S4, C2^3) with the trivial action, the action along the coupling, and a
cross-check against the number of explicit extension classes.
"""

from redclass.abcoh import h2, parse_abgroup, trivial_module
from redclass.extoracle import classify_extensions_bruteforce
from redclass.fingrp import parse_group

S4, A = parse_group("S4"), parse_abgroup("C2^3")
M = trivial_module(S4, A)
coh = h2(S4, M)
print("H2(S4, C2^3) trivial action:", coh.structure.power_notation(), "order", coh.order)

# a few representative cocycles, as coordinates on the invariant factors
for coords in list(coh.elements())[:4]:
    print(coords)

cen = classify_extensions_bruteforce(A, S4, action=M, confirm=False)
print("extension classes counted directly:", cen.couplings[0].equivalence_count)
