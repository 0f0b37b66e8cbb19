"""Print the Mackey-identity rows for every subring pair of a ring, marking failures.

For each (L, K) the row at basis element c compares dim LCK * dim(L cap cK) with
dim L * dim CK; pairs where some row differs are listed with the failing rows and
whether the identity still holds at the least-index double-coset representatives.

Usage: python scripts/mackey_table.py [RING ...]   (default: every shipped ring)
"""
from __future__ import annotations

import sys

from hopfmackey.conjugacy import is_mackey_pair
from hopfmackey.io import RING_FIXTURES, load_ring
from hopfmackey.subrings import enumerate_subrings


def report(name: str) -> int:
    R = load_ring(name)
    subs = enumerate_subrings(R)
    bad = 0
    for L in subs:
        for K in subs:
            cert = is_mackey_pair(R, L, K)
            if cert.is_pair:
                continue
            bad += 1
            print(f"{name}: ({L!r}, {K!r}) not a pair; "
                  f"holds at representatives: {cert.holds_at_representatives}")
            for r in cert.rows:
                if r.lhs != r.rhs:
                    print(f"    c={R.basis[r.c]}: {r.dim_LCK}*{r.dim_meet} = {r.lhs}  vs  "
                          f"{r.dim_L}*{r.dim_CK} = {r.rhs}")
    print(f"{name}: {len(subs) ** 2 - bad}/{len(subs) ** 2} subring pairs are Mackey pairs")
    return bad


if __name__ == "__main__":
    names = sys.argv[1:] or list(RING_FIXTURES)
    for n in names:
        report(n)
