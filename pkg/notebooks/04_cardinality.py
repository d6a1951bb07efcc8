"""Counting A_n in closed form, and how |A_n| grows."""

import numpy as np

from gwalk import asymptotic_report, cardinality_breakdown, theta

# The four summands for a few n; theta picks up members in a narrow quotient band.
for n in (1, 2, 12, 20, 100, 1000):
    b = cardinality_breakdown(n)
    print(f"n={n:5d}: {b.expression()}")

# How often does the band contribute?
ns = np.arange(1, 3001)
thetas = np.array([theta(int(n)) for n in ns])
print("theta histogram over n <= 3000:", np.bincount(thetas).tolist())

# |A_n| / (2 sqrt(2n)) creeps toward 1.
for row in asymptotic_report([10**k for k in range(2, 7)]):
    print(f"n={row.n:>8d} |A_n|={row.size:5d} ratio={row.ratio}")
