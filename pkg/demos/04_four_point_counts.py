#!/usr/bin/env python3
"""Four-point counts, their closed forms, and the lump sum.

A degree-d count pairs an insertion tuple (four of the special points
X1..X4) with the number of (sublattice, marking) configurations hitting
it.  Up to permuting the insertions and translating, every nonzero case
is one of three shapes:

    all four distinct     X1 X2 X3 X4
    two quads             Xj Xj Xj Xj
    two pairs             Xi Xi Xj Xj   (i != j)

and each shape has a divisor-sum closed form.  This script prints the
count tables next to those closed forms and finishes with the lump sum:
summing over all insertion tuples recovers six markings per sublattice.
"""

from fractions import Fraction
from itertools import product

from pillowcase import (
    OrbiPoint,
    coefficient,
    correlator,
    correlator_series,
    divisor_series,
    divisor_series_even,
    divisor_series_odd,
    sigma1,
    total_count_series,
)
from pillowcase.qseries import scale, sub, substitute_power

N = 12

SHAPES = [
    ("X1 X2 X3 X4", (1, 2, 3, 4)),
    ("X2 X2 X2 X2", (2, 2, 2, 2)),
    ("X1 X1 X2 X2", (1, 1, 2, 2)),
    ("X2 X2 X3 X3", (2, 2, 3, 3)),
    ("X1 X1 X1 X1", (1, 1, 1, 1)),
]

print(f"{'d':>3}", "".join(f"{label:>14}" for label, _ in SHAPES))
for d in range(1, N + 1):
    counts = [correlator(tuple(OrbiPoint(v) for v in ins), d) for _, ins in SHAPES]
    print(f"{d:>3}", "".join(f"{c:>14}" for c in counts))

# closed forms, as series identities at the same truncation
distinct = correlator_series((OrbiPoint.X1, OrbiPoint.X2, OrbiPoint.X3, OrbiPoint.X4), N)
assert distinct == divisor_series_odd(N)
print("\n<X1 X2 X3 X4> = sum over odd divisors")

quads = correlator_series((OrbiPoint.X2,) * 4, N)
assert quads == scale(substitute_power(divisor_series(N), 4), 6)
print("<Xj Xj Xj Xj> = 6 * D(q^4)")

pairs = correlator_series((OrbiPoint.X1, OrbiPoint.X1, OrbiPoint.X2, OrbiPoint.X2), N)
even_slice = sub(divisor_series_even(N), substitute_power(divisor_series(N), 4))
assert pairs == scale(even_slice, Fraction(2, 3))
print("<Xi Xi Xj Xj> = (2/3) * (D_even - D(q^4))")

# the same number for every choice of the pair
pair_values = {
    correlator_series((i, i, j, j), N)
    for i, j in product(OrbiPoint, repeat=2)
    if i != j
}
assert len(pair_values) == 1
print("all 12 ordered pair choices give the same series")

# lump sum: ordered tuples partition the six markings of each sublattice
totals = total_count_series(N)
for d in range(1, N + 1):
    assert coefficient(totals, d) == 6 * sigma1(d)
print(f"\nsum over all 256 tuples at degree d is 6 * sigma1(d), checked to d = {N}")
