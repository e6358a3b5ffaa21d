"""Run every numerical certificate and print a compact table.

Run:  python demos/04_certify.py          (genera 2, 3, 5)
      python demos/04_certify.py 7 9      (other genera)
"""

import sys

from thurston_spine.verify import VerifyConfig, run_all, summary

genera = tuple(int(a) for a in sys.argv[1:]) or (2, 3, 5)
results = run_all(VerifyConfig(genus_list=genera, grid_n=120))

for r in results:
    mark = "ok " if r.passed else "BAD"
    print(f"{mark} {r.claim_id:<26} g={r.genus:<3} {r.details[:90]}")

print(summary(results))
