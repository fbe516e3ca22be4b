"""Bound calculators for topological Tverberg numbers of matroids.

Lower bounds: every prime power p <= 2*ell(b, r, d+1) is achievable for a
rank-r matroid with b disjoint bases mapped to d-space.  Upper bounds: in
codimension >= 3 the non-prime-power ceiling of d/(d-r+1) caps the count.

Run:  python3 demos/06_bound_calculators.py
"""

from tvlab.bounds import (
    BoundQuery,
    bound_report,
    ell,
    is_prime_power,
    npp_ceiling,
    tt_lower_bound,
)

print("== the threshold ell ==")
for b, r, d in ((4, 4, 2), (16, 4, 3), (100, 10, 4)):
    print(f"b={b:4d} r={r:2d} d={d}: ell = {ell(b, r, d + 1):8.3f}")

print("\n== lower bounds ==")
for b, r, d in ((4, 4, 2), (16, 4, 3), (64, 6, 3), (1000, 12, 5)):
    rep = tt_lower_bound(BoundQuery(b, r, d))
    print(f"b={b:5d} r={r:2d} d={d}: best prime power {rep.best_prime_power}, "
          f"connectivity floor used {rep.connectivity_lower}")

print("\n== prime powers and their gaps ==")
npps = [n for n in range(2, 40) if not is_prime_power(n)]
print(f"first non-prime-powers: {npps[:8]}")
print(f"npp ceiling of 3: {npp_ceiling(3)}; of 6.01: {npp_ceiling(6.01)}")

print("\n== combined reports ==")
for b, r, d in ((9, 2, 6), (25, 3, 8)):
    rep = bound_report(b, r, d)
    print(rep.to_dict())
