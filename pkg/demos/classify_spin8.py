"""
Classifying disconnected groups with identity component Spin(8)
================================================================

The component group is S3 acting on the D4 diagram through triality.
Each row of the table is one coupling class; its orbit count is how many
non-isomorphic groups share that coupling.
"""

from redclass.classify import classify
from redclass.fingrp import parse_group
from redclass.rootdata import build_root_datum

rd = build_root_datum("D4", "sc")
S3 = parse_group("S3")

tab = classify(rd, S3, 0, group_label="S3")
for row in tab.rows:
    print(f"image {row.coupling_image:>3}  H2 = {str(row.h2):8}  orbits {row.orbits}")
print("total", tab.total)

# in characteristic 2 the centre loses its 2-torsion and the count drops
print("char 2 total", classify(rd, S3, 2).total)

# the same question for SL2^3 with S4 permuting the factors
big = classify(build_root_datum("A1*A1*A1"), parse_group("S4"), 0)
print("SL2^3 by S4:", [r.orbits for r in big.rows], "total", big.total)
