#!/usr/bin/env python3
"""Walk through the sublattice census.

Every finite-index sublattice of Z^2 has exactly one Hermite basis
(h, 0), (m, g) with h*g = d and 0 <= m < h, so counting index-d
sublattices is the same as counting those triples, and the total is the
divisor sum sigma_1(d).  This script enumerates the triples for small d,
reduces a few hand-picked messy bases to show the canonical form, and
checks the census against sigma_1.

Run:  python3 demos/01_sublattice_census.py
"""

from pillowcase import Basis2, enumerate_sublattices, hnf_reduce, sigma1


def census_table(dmax: int) -> None:
    print(f"index-d sublattices of Z^2 for d <= {dmax}")
    print(f"{'d':>3} {'sigma1':>7}  triples (h, m, g)")
    for d in range(1, dmax + 1):
        lats = enumerate_sublattices(d)
        triples = "  ".join(f"({lat.h},{lat.m},{lat.g})" for lat in lats)
        print(f"{d:>3} {sigma1(d):>7}  {triples}")
        assert len(lats) == sigma1(d)


def reduction_examples() -> None:
    # same sublattice, three different bases
    bases = [
        Basis2((2, 0), (1, 2)),
        Basis2((1, 2), (-1, 2)),
        Basis2((3, 2), (1, 2)),
    ]
    print("\nthree bases of one index-4 sublattice, reduced:")
    for basis in bases:
        lat = hnf_reduce(basis)
        print(f"  {basis.v1}, {basis.v2}  ->  (h, m, g) = ({lat.h}, {lat.m}, {lat.g})")
    reduced = {hnf_reduce(b) for b in bases}
    assert len(reduced) == 1, "all three spans coincide, so the triples must"


def main() -> None:
    census_table(12)
    reduction_examples()
    total = sum(sigma1(d) for d in range(1, 101))
    print(f"\nrunning total of sublattices with index <= 100: {total}")


if __name__ == "__main__":
    main()
