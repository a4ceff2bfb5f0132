"""
Checking the theorems on every small digraph
============================================

All 4096 labeled digraphs on four vertices are swept.  Every strongly
connected one meeting a degree-sum hypothesis must yield certified
witnesses, and the boundary test for maximality is compared with brute
force.  A short random campaign follows on larger n.
"""

import time

from noncritical.campaign import run_exhaustive, run_random

start = time.perf_counter()
result = run_exhaustive(4)
print(f"n=4: {result.verdict} in {time.perf_counter() - start:.1f}s")
print("  strongly connected:", result.strongly_connected)
print("  classes:", result.hypothesis_counts)
print("  witness routes:", result.monitored_stats["case_tags"])

start = time.perf_counter()
result = run_random((6, 12), 2000, seed=7)
print(f"random n in 6..12: {result.verdict} in {time.perf_counter() - start:.1f}s")
for row in result.monitored_stats["leaf_triples"]:
    print("  leaf sets", row)
