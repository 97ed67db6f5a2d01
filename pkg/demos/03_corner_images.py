#!/usr/bin/env python3
"""Where the three free corners of the quotient land.

The quotient of R^2 by a sublattice (extended by the point reflection)
is a sphere with four special points.  One of them is always the image
of the origin; the other three are the images of the half-lattice points
(1/2, 0), (1/2, 1/2), (0, 1/2), and which of the four special points
X1..X4 they hit depends only on the parities of the Hermite triple
(h, m, g).

This script tabulates that dependence empirically from the first few
hundred sublattices and prints the resulting eight-row table, then shows
the translation moves that permute X2, X3, X4 while fixing X1.
"""

from pillowcase import OrbiPoint, classify_images, enumerate_sublattices, translate_action


def main() -> None:
    # group every sublattice of index <= 60 by the parity of its triple
    by_parity: dict[tuple[int, int, int], set[tuple[OrbiPoint, ...]]] = {}
    lattices = 0
    for d in range(1, 61):
        for lat in enumerate_sublattices(d):
            key = (lat.g % 2, lat.h % 2, lat.m % 2)
            by_parity.setdefault(key, set()).add(classify_images(lat))
            lattices += 1

    print(f"images of the three half-points, over {lattices} sublattices:")
    print(f"{'g%2':>4} {'h%2':>4} {'m%2':>4}   images of (1/2,0), (1/2,1/2), (0,1/2)")
    for key in sorted(by_parity):
        images = by_parity[key]
        assert len(images) == 1, "images depend on the parities alone"
        (triple,) = images
        names = ", ".join(p.name for p in triple)
        print(f"{key[0]:>4} {key[1]:>4} {key[2]:>4}   {names}")

    # only the row with g and h both odd reaches three distinct corners
    print("\nrows reaching all of X2, X3, X4:")
    for key in sorted(by_parity):
        (triple,) = by_parity[key]
        if len(set(triple)) == 3:
            print(f"  (g, h, m) = {key} mod 2")

    # the translation moves: each swaps X1 with one corner and the other two
    print("\ntranslation actions on the four special points:")
    for name in ("half", "half_plus", "half_i"):
        action = translate_action(name)
        cycle = "  ".join(f"{p.name}->{action[p].name}" for p in OrbiPoint)
        print(f"  {name:<10} {cycle}")
        assert all(action[action[p]] == p for p in OrbiPoint), "each is an involution"

    # sanity: the three actions compose like the Klein four-group
    half = translate_action("half")
    half_plus = translate_action("half_plus")
    half_i = translate_action("half_i")
    assert all(half_plus[half[p]] == half_i[p] for p in OrbiPoint)
    print("\nhalf then half_plus equals half_i, as translations should")

    # every insertion tuple without X1 can be moved to one with X1 in front,
    # which is how the four-point counts get normalized
    for corner in (OrbiPoint.X2, OrbiPoint.X3, OrbiPoint.X4):
        moved = {name for name in ("half", "half_plus", "half_i")
                 if translate_action(name)[corner] == OrbiPoint.X1}
        assert len(moved) == 1
    print("each corner is sent to X1 by exactly one translation")


if __name__ == "__main__":
    main()
