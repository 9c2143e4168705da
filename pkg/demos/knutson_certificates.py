"""
Truncated inverses and Knutson bounds
=====================================
"""

from redclass.cli import parse_coupling
from redclass.fingrp import parse_group
from redclass.knutson import greedy_inverse, knutson_bound
from redclass.rootdata import build_root_datum, out_group

a1 = build_root_datum("A1")
inv = greedy_inverse(a1, {(1,): 1}, (7,))
print("inverse coefficients", [x for _, x in inv.coefficients(a1)])
print("certificate passed", inv.passed)

for spec, g in (("D4", "S3"), ("A1*A1*A1", "S4")):
    rd, H = build_root_datum(spec), parse_group(g)
    out = out_group(rd)
    phi = parse_coupling("surjective", H, out.group)
    split = knutson_bound(rd, H, phi, "fundamental", "split", out)
    proj = knutson_bound(rd, H, phi, "all", "projective", out)
    print(f"{spec}/{g}: split {split.bound}, projective {proj.bound}, |H| = {H.order}")
