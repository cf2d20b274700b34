"""
Solving for the twisted N_v of SU(3)_k
======================================

Search all small symmetric integer matrices with the prescribed spectrum and
show that one permutation class survives at every level.
"""
import time

import numpy as np

from fusionkit.nimrep import SearchStats, expected_nv, solve_nv

for k in range(1, 13):
    stats = SearchStats()
    t0 = time.perf_counter()
    sols = solve_nv(k, stats)
    dt = time.perf_counter() - t0
    sol = sols[0]
    cert = sol.coxeter
    kind = cert.type_name or f"double {cert.double_family}{cert.double_rank}"
    print(f"k={k:2d} m={len(sol.nv)} classes={len(sols)} nodes={stats.nodes:5d} "
          f"{kind:>10} {dt * 1e3:6.1f} ms")
    assert np.array_equal(sol.labeled_nv, expected_nv(k))

print("N_v at k=4:\n", solve_nv(4)[0].labeled_nv)
