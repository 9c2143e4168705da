"""
Root data, fundamental groups and diagram automorphisms
=======================================================
"""

from redclass.rootdata import build_root_datum, fundamental_group, out_group

for spec, lattice in (("D4", "sc"), ("D4", "ad"), ("E6", "sc"), ("A1*A1*A1", "sc")):
    rd = build_root_datum(spec, lattice)
    fg = fundamental_group(rd)
    out = out_group(rd)
    print(f"{spec:9} {lattice}  rank {rd.rank}  Lambda {fg.group}  |Out| {out.group.order}")

rd = build_root_datum("G2")
print("G2 Cartan matrix")
print(rd.cartan)
