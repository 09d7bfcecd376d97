"""Free cyclic submodules and how they meet.

Run: python demos/04_free_cyclic_submodules.py
"""

from fcslab import catalog
from fcslab.module import fcs_intersection_matrix, fcs_list, intersection_property

for name in ("GF(4)", "Z4", "T2(GF(2))"):
    R = catalog.catalog_ring(name)
    subs = fcs_list(R)
    odd = [tuple(s.generator) for s in subs if not s.unimodular_generated]
    print(f"{name}: {len(subs)} free cyclic submodules, {len(odd)} without a unimodular generator {odd}")

# Over the ternions the three exceptional submodules share a nonzero vector
# with every other free cyclic submodule.
T = catalog.catalog_ring("T2(GF(2))")
subs = fcs_list(T)
M = fcs_intersection_matrix(T)
for i, s in enumerate(subs):
    if not s.unimodular_generated:
        print(f"  R{tuple(s.generator)} meets the others in", M[i].tolist())
print("property holds:", intersection_property(T)[0])
