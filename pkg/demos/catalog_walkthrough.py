"""
Walking through the catalog
===========================

Every pair g in g' with a shared orbit, checked one at a time.
"""

import time

from sharedorbits.sharedpairs import catalog, chain_report, verify_pair

for rec in catalog():
    t0 = time.perf_counter()
    rep = verify_pair(rec)
    print(f"{'PASS' if rep.passed else 'FAIL'} {rep.name}  [{time.perf_counter() - t0:.1f}s]")

# chains with a constant orbit dimension
for name in ("a", "b"):
    print(chain_report(name).to_text())
