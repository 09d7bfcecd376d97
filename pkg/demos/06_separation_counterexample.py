"""Two maximal ideals do not always decide unimodularity.

Take R = Z2 x Z2 x Z2 with maximal ideals I_k = {x : x_k = 0}. For
a = (0,0,1) and b = (0,1,0) we have a in I2 but not I3, b in I3 but not I2,
so a and b are separated by two maximal ideals. Yet both lie in I1, so
aR + bR is contained in I1 and (a, b) is not unimodular. The correct test is
whether some maximal right ideal contains both entries.

Run: python demos/06_separation_counterexample.py
"""

from fcslab import catalog
from fcslab.ideals import Side, maximal_ideals
from fcslab.module import is_unimodular
from fcslab.theorems import check_common_maximal_ideal, check_two_max_ideals

R = catalog.catalog_ring("Z2xZ2xZ2")  # element index 4*x1 + 2*x2 + x3
a, b = 1, 2
for I in maximal_ideals(R, Side.RIGHT):
    print(f"maximal ideal {sorted(I.members)}: a in it {a in I.members}, b in it {b in I.members}")
print("unimodular:", is_unimodular(R, (a, b)))

res = check_two_max_ideals(R)
print("\nseparation check:", res.status.value, res.witness)
print("common-ideal check:", check_common_maximal_ideal(R).status.value)

# With only two maximal right ideals the check holds; a third one is what breaks it.
for name in ("Z6", "Z2xZ2", "T2(GF(2))", "Z2xT2(GF(2))"):
    S = catalog.catalog_ring(name)
    print(f"{name:>14}: {len(maximal_ideals(S, Side.RIGHT))} maximal right ideals, separation check {check_two_max_ideals(S).status.value}")
