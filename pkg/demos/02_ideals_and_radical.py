"""One-sided ideals, maximal ideals and the Jacobson radical.

Run: python demos/02_ideals_and_radical.py
"""

from fcslab import catalog
from fcslab.ideals import Side, all_ideals, is_local, is_principal, jacobson_radical, maximal_ideals


def show(R):
    print(f"== {R.name}")
    for side in (Side.LEFT, Side.RIGHT):
        ideals = all_ideals(R, side)
        maxes = maximal_ideals(R, side)
        tags = ["" if is_principal(R, I) else " (non-principal)" for I in maxes]
        print(f"  {side.value}: {len(ideals)} ideals, maximal:", ", ".join(f"{sorted(I.members)}{t}" for I, t in zip(maxes, tags)))
    rad = jacobson_radical(R)
    print(f"  radical {sorted(rad.radical.members)}, nilpotency {rad.nilpotency}, local {is_local(R)}")


for name in ("Z4", "Z6", "Z16", "T2(GF(2))", "M2(GF(2))"):
    show(catalog.catalog_ring(name))

# T2(GF(2)) is the odd one out: its left and right ideal lattices differ, and
# one of its two maximal right ideals needs two generators.
