"""Run the full invariant battery on every shipped ring and the classical oracle on every group.

Usage: python scripts/run_all_checks.py [--json OUT]
"""
from __future__ import annotations

import argparse
import json
import time

from hopfmackey.green import classical_instance, verify_green
from hopfmackey.groups import exhaustive_oracle
from hopfmackey.io import GROUP_FIXTURES, RING_FIXTURES, jsonable, load_group, load_ring
from hopfmackey.suite import hopf_check


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--json", help="write the per-fixture summaries here")
    args = ap.parse_args()
    failed = 0
    out = {"rings": {}, "groups": {}}
    for name in RING_FIXTURES:
        t0 = time.perf_counter()
        rep, summary = hopf_check(load_ring(name))
        failed += not rep.passed
        out["rings"][name] = summary
        print(f"{name:8s} {rep.summary():24s} {time.perf_counter() - t0:5.2f}s  "
              f"Mackey pairs {summary['mackey_pairs']}/{summary['subring_pairs']}")
        for c in rep.failures():
            print(f"    FAIL {c.name}: {jsonable(c.witness)}")
    for name in GROUP_FIXTURES:
        t0 = time.perf_counter()
        G = load_group(name)
        rep, counts = exhaustive_oracle(G)
        green = verify_green(classical_instance(G))
        failed += not rep.passed or not green.passed
        out["groups"][name] = {"oracle_cases": counts, "green": green.passed}
        print(f"{name:8s} oracle {'pass' if rep.passed else 'FAIL'} ({sum(counts.values())} cases), "
              f"Green axioms {'pass' if green.passed else 'FAIL'}  {time.perf_counter() - t0:5.2f}s")
    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            json.dump(jsonable(out), fh, indent=2, sort_keys=True)
    return 1 if failed else 0


if __name__ == "__main__":
    raise SystemExit(main())
