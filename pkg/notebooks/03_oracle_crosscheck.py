"""A brute-force search set against the membership rule on small cases."""

import time

from gwalk import is_unavoidable, run_search
from gwalk.oracle import default_box, tight_box

# Small boxes settle quickly; found and none both compare against the rule.
for n, d in [(2, 3), (3, 2), (1, 1), (5, 4), (4, 2), (6, 4)]:
    out = run_search(n, d, tight_box(n, d), budget=2_000_000)
    rule = "avoidable" if not is_unavoidable(n, d) else "forced"
    print(f"n={n} d={d}: {out.status:16s} {out.expansions:>9d} expansions, rule says {rule}")

# The default box leaves room for the whole serpentine, and refutations grow
# steeply with it. A capped run shows how far a second of search gets.
n, d = 5, 3
box = default_box(n, d)
start = time.perf_counter()
out = run_search(n, d, box, budget=2_000_000)
print(f"default box {box}: {out.status} after {out.expansions} expansions in {time.perf_counter() - start:.1f} s")
