"""Which differences does n force? Balanced division decides it."""

import numpy as np

from gwalk import balanced_division, obstruction_set

# Every d from 1 to n, with the quotient and the balanced remainder.
n = 20
rows = np.array([(d, *(lambda b: (b.k, b.r, b.margin))(balanced_division(n, d))) for d in range(1, n + 1)])
print(" d  k  r  k-|r|")
for d, k, r, margin in rows:
    print(f"{d:2d} {k:2d} {r:2d} {margin:4d}", "member" if margin >= 1 else "")

# d is forced exactly when the margin k - |r| is positive.
members = rows[rows[:, 3] >= 1, 0]
print("A_20 =", members.tolist())
assert members.tolist() == list(obstruction_set(n))

# Past d = n the quotient is at most 1 and |r| is at least 1, so nothing larger qualifies.
sizes = np.array([len(obstruction_set(m)) for m in range(1, 201)])
print("largest |A_n| for n <= 200:", sizes.max(), "at n =", int(sizes.argmax()) + 1)
