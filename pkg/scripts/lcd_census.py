"""Enumerate LCD group codes over a list of groups and print their [n, k, d] and structure.

    python scripts/lcd_census.py sym:3 sym:4 dihedral:5 product:cyclic:3,cyclic:3
"""

import sys
from collections import Counter

from lcdgc.codes import MAX_DISTANCE_DIM, enumerate_lcd_codes, is_lcd_intersection, structural_parameters
from lcdgc.groups import make_group

DEFAULT = ["cyclic:9", "cyclic:15", "cyclic:21", "sym:3", "sym:4", "dihedral:4", "dihedral:5",
           "product:cyclic:3,cyclic:3"]


def census(spec: str) -> None:
    g = make_group(spec)
    codes = [c for c in enumerate_lcd_codes(g) if c.support]
    print(f"{spec}: {len(codes)} nonzero LCD idempotents")
    params = Counter()
    for c in codes:
        assert is_lcd_intersection(c)
        d = c.d if c.k <= MAX_DISTANCE_DIM else None
        params[(c.n, c.k, d, structural_parameters(c).case)] += 1
    for (n, k, d, case), count in sorted(params.items(), key=lambda kv: (kv[0][1], kv[0][2] or 0)):
        dist = "?" if d is None else d
        print(f"  [{n},{k},{dist}] x{count}  ({case})")


if __name__ == "__main__":
    for spec in sys.argv[1:] or DEFAULT:
        census(spec)
