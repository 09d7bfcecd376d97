"""Classifying every vector of the plane over a ring.

A vector (a, b) is unimodular when ax + by = 1 is solvable. Scaling unimodular
vectors from the left covers part of the plane; what is left over are the
outliers. Over fields and Z_n there are none.

Run: python demos/03_plane_and_outliers.py
"""

from fcslab import catalog
from fcslab.module import class_counts, classify_vector, is_free, outliers

for name in ("GF(4)", "Z4", "Z6", "Z2xZ2xZ2", "T2(GF(2))"):
    R = catalog.catalog_ring(name)
    counts = class_counts(R)
    print(f"{name:>10}: " + ", ".join(f"{k} {v}" for k, v in counts.items()))

T = catalog.catalog_ring("T2(GF(2))")
left, right = sorted(outliers(T, "left")), sorted(outliers(T, "right"))
print("\nternion outliers, left side: ", [tuple(v) for v in left])
print("ternion outliers, right side:", [tuple(v) for v in right])
print("all left outliers free:", all(is_free(T, v) for v in left))
print("class of (2,4):", classify_vector(T, (2, 4)).value)
