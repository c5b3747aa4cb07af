"""Why the plan of infinitely many auxiliaries cannot work for p = 3.

Scanning every prime theta up to a million, only 7 and 13 have no two
consecutive nonzero cubes.  For p = 5, 7, ... the qualifying sets also thin
out quickly.
"""
import time

from germain import nc_frontier, scan_nc

for bound in (10, 100, 10**4, 10**6):
    report = scan_nc(3, bound)
    print(f"p = 3, theta <= {bound:>8}: {report.qualifying}  ({report.candidates_tested} candidates)")

print()
for p in (5, 7, 11, 13, 17):
    t0 = time.perf_counter()
    largest, count = nc_frontier(p, 10**6)
    print(f"p = {p:>2}: {count:>3} auxiliaries up to 10^6, largest {largest}  "
          f"[{time.perf_counter() - t0:.2f} s]")
