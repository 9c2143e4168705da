"""
Weyl characters and tensor products
===================================
"""

from redclass.rootdata import build_root_datum
from redclass.weylchar import dual_weight, tensor_decompose, weyl_dim

d4 = build_root_datum("D4")
vec, spin = (1, 0, 0, 0), (0, 0, 0, 1)
print("dims", weyl_dim(d4, vec), weyl_dim(d4, spin))
for lam, m in sorted(tensor_decompose(d4, vec, spin).items()):
    print(f"  {lam} x{m}  dim {weyl_dim(d4, lam)}")

a2 = build_root_datum("A2")
print("A2 dual of (2,1):", dual_weight(a2, (2, 1)))
print("A2 (1,0) x (0,1):", dict(tensor_decompose(a2, (1, 0), (0, 1))))

e8 = build_root_datum("E8")
print("E8 adjoint dimension", weyl_dim(e8, (0, 0, 0, 0, 0, 0, 0, 1)))
