"""Running the theorem checks on a few rings.

Run: python demos/05_theorem_suite.py
"""

from fcslab import catalog
from fcslab.theorems import run_all

for name in ("Z6", "Z9", "T2(GF(2))"):
    R = catalog.catalog_ring(name)
    for side in ("left", "right"):
        print(run_all(R, side).to_text())
        print()
