"""Divisor-window questions: which n admit a walk that sidesteps their windows?"""

from collections import Counter

from gwalk import q2_is_divisor_set, q4_classify, q5_classify, q5_exceptional_scan

# A_n equals the divisor set only for a handful of n.
print("A_n = divisors(n):", [n for n in range(1, 501) if q2_is_divisor_set(n)])

# Window half-width 1: primes plus three small composites.
members = [r.n for r in (q4_classify(n) for n in range(1, 101)) if r.verdict == "member"]
print("K=1 members up to 100:", members)
r = q4_classify(20)
print("20 is blocked by divisor", r.obstruction.divisor, "window", r.obstruction.window)

# Larger windows: a case split, plus finitely many leftovers settled by search.
for K in (2, 3):
    reports = [q5_classify(n, K) for n in range(1, 401)]
    tally = Counter((r.case, r.verdict) for r in reports)
    print(f"K={K}:", dict(sorted(tally.items())))
    left = q5_exceptional_scan(K, 400)
    print("  leftovers:", [(r.n, r.verdict) for r in left])
