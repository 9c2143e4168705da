"""
Brute-force extensions as an independent check
===============================================

Every cocycle class gives an explicit crossed product.  Counting them up to
isomorphism, without any root-datum input, reproduces the classification.
"""

from redclass.abcoh import parse_abgroup
from redclass.extoracle import classify_extensions_bruteforce, transported_couplings
from redclass.fingrp import parse_group
from redclass.rootdata import build_root_datum

A, H = parse_abgroup("C2^2"), parse_group("S3")
reps, image = transported_couplings(build_root_datum("D4"), H, A)

cen = classify_extensions_bruteforce(A, H, couplings=reps, confirm=True)
for c in cen.couplings:
    print(f"classes {c.equivalence_count}  up to isomorphism {c.virtual_count}  "
          f"confirmed {c.confirmed}")
print("total", cen.virtual_total)

# restricting the kernel automorphisms to the image of Out gives the
# classification scope rather than the abstract-group scope
scoped = classify_extensions_bruteforce(A, H, couplings=reps, aut_subgroup=image, confirm=True)
print("Out-restricted total", scoped.virtual_total)
