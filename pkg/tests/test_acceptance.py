"""The fourteen acceptance criteria, each with its tolerance and time limit.

Every test records its verdict in ``conftest.ACCEPTANCE`` (printed in the
terminal summary) before asserting.  Fixtures are loaded fresh inside each
timed block so no cache filled by an earlier test shortens the measurement.
Run directly with ``python tests/test_acceptance.py`` for the same lines.
"""
import copy
import os
import sys
import time

import numpy as np
import pytest

sys.path.insert(0, os.path.dirname(__file__))

from conftest import ACCEPTANCE  # noqa: E402
from hopfmackey import green as green_mod  # noqa: E402
from hopfmackey.conjugacy import (check_cor32, check_orbit_law, check_prop28, check_prop34, check_prop67,  # noqa: E402
                                  check_remark30, conjugate_subring, is_character_normal, is_mackey_pair,
                                  mackey_rows, theorem4_inequality, theorem7_dimension_check)
from hopfmackey.cosets import (check_cor15, check_double_union, check_partition, check_remark21,  # noqa: E402
                               check_theorem16, coset_rank, crosscheck_prop10, double_cosets, right_cosets)
from hopfmackey.errors import HopfMackeyError  # noqa: E402
from hopfmackey.grading import (check_component_dims, check_prop56, check_theorem61,  # noqa: E402
                                universal_grading)
from hopfmackey.green import classical_instance, single_entry_mutations, verify_green  # noqa: E402
from hopfmackey.groups import cyclic_group, exhaustive_oracle, is_isomorphic  # noqa: E402
from hopfmackey.io import RING_FIXTURES, load_fixture, load_group, load_ring, ring_from_document  # noqa: E402
from hopfmackey.ring_core import fp_eigenvalue, validate_ring  # noqa: E402
from hopfmackey.subrings import FusionSubring, enumerate_subrings, make_subring, subrings_of_invertibles  # noqa: E402

GROUP_NAMES = ("group_s3", "group_d4", "group_q8", "group_a4")
GREEN_SEED = 20261014


def record(k, ok, elapsed, limit, detail=""):
    ok = bool(ok) and elapsed < limit
    ACCEPTANCE[k] = (ok, f"{elapsed:.2f}s (limit {limit}s) {detail}".rstrip())
    return ok


def fresh_rings():
    return {name: load_ring(name) for name in RING_FIXTURES}


# -- criterion 1: validation and single-entry mutations ---------------------------
def _tensor(doc):
    n = len(doc["basis"])
    N = np.zeros((n, n, n), dtype=int)
    for e in doc["products"]:
        for t, m in e["terms"]:
            N[e["left"], e["right"], t] = m
    return N


def _expected_witness(doc, family):
    """First violation of ``family`` in lexicographic order, computed on the raw tensor."""
    N, u, dims, dual = _tensor(doc), doc["unit"], np.array(doc["dims"]), doc["dual"]
    n = len(dims)
    if family == "unit_law":
        for d in range(n):
            if not np.array_equal(N[u, d], np.eye(n, dtype=int)[d]):
                return (u, d)
            if not np.array_equal(N[d, u], np.eye(n, dtype=int)[d]):
                return (d, u)
    if family == "duality_law":
        for c in range(n):
            for d in range(n):
                if N[c, d, u] != int(d == dual[c]):
                    return (c, d)
    if family == "associativity":
        left = np.einsum("abe,egf->abgf", N, N)
        right = np.einsum("bge,aef->abgf", N, N)
        bad = np.argwhere(left != right)
        if len(bad):
            return tuple(int(x) for x in bad[0])
    if family == "dimension_homomorphism":
        for c in range(n):
            for d in range(n):
                if dims[c] * dims[d] != N[c, d] @ dims:
                    return (c, d)
    return None


def _mutate(doc, c, d, e, delta):
    out = copy.deepcopy(doc)
    entry = next(x for x in out["products"] if (x["left"], x["right"]) == (c, d))
    terms = dict((t, m) for t, m in entry["terms"])
    terms[e] = terms.get(e, 0) + delta
    assert terms[e] >= 0
    entry["terms"] = sorted([t, m] for t, m in terms.items() if m)
    return out


# (fixture, left, right, constituent, delta) per axiom family
MUTATIONS = {
    "unit_law": [("rep_s3", 0, 2, 1, 1), ("rep_d4", 0, 4, 2, 1), ("ks3", 1, 0, 0, 1),
                 ("kd4", 0, 3, 3, -1), ("rep_a4", 3, 0, 0, 1)],
    "duality_law": [("rep_s3", 2, 2, 0, 1), ("rep_d4", 1, 1, 0, -1), ("rep_q8", 4, 4, 0, 1),
                    ("ks3", 1, 2, 0, 1), ("rep_a4", 1, 2, 0, -1)],
    "associativity": [("ks3", 1, 1, 2, 1), ("kd4", 1, 1, 1, 1), ("rep_d4", 1, 2, 1, 1),
                      ("rep_q8", 1, 3, 2, 1), ("rep_a4", 1, 1, 1, 1)],
    "dimension_homomorphism": [("rep_s3", 2, 2, 2, -1), ("rep_d4", 4, 4, 3, -1), ("rep_q8", 4, 4, 1, -1),
                               ("rep_a4", 3, 3, 3, -1), ("kd4", 1, 2, 4, 1)],
}


def criterion1():
    t0 = time.perf_counter()
    problems = []
    for name in RING_FIXTURES:
        if not validate_ring(load_ring(name)).passed:
            problems.append(f"{name} rejected")
    count = 0
    for family, cases in MUTATIONS.items():
        for name, c, d, e, delta in cases:
            count += 1
            doc = _mutate(load_fixture(name), c, d, e, delta)
            check = validate_ring(ring_from_document(doc, validate=False))[family]
            expect = _expected_witness(doc, family)
            if check.passed or expect is None or tuple(check.witness) != expect:
                problems.append(f"{family} {name} {(c, d, e, delta)}: got {check.witness}, want {expect}")
    return not problems and count == 20, time.perf_counter() - t0, f"{count} mutations; {problems[:2]}"


def test_criterion_1():
    ok, dt, detail = criterion1()
    assert record(1, ok, dt, 1.0, detail), ACCEPTANCE[1]


# -- criteria 2-10: fusion-ring suites ---------------------------------------------
def criterion2():
    t0 = time.perf_counter()
    cases = 0
    ok = True
    for R in fresh_rings().values():
        subs = enumerate_subrings(R)
        for K in subs:
            part = right_cosets(R, K)
            ok &= bool(check_partition(R, part))
            ok &= all(isinstance(coset_rank(part, k), int) and coset_rank(part, k) >= 1 for k in range(len(part)))
            for L in subs:
                dbl = double_cosets(R, L, K)
                ok &= bool(check_partition(R, dbl)) and bool(check_double_union(R, dbl))
            cases += 1
    return ok, time.perf_counter() - t0, f"{cases} (ring, subring) cases"


def criterion3():
    t0 = time.perf_counter()
    cases, ok = 0, True
    for R in fresh_rings().values():
        subs = enumerate_subrings(R)
        for L in subs:
            for K in subs:
                cases += 1
                ok &= bool(crosscheck_prop10(R, L, K))
    return ok, time.perf_counter() - t0, f"{cases} pairs"


def criterion4():
    t0 = time.perf_counter()
    cases, ok = 0, True
    for name, R in fresh_rings().items():
        subs = enumerate_subrings(R)
        for K in subs:
            ok &= bool(check_prop34(R, K))
            if R.is_commutative():
                ok &= bool(check_remark30(R, K))
            for c in range(R.n):
                cases += 1
                try:
                    conjugate_subring(R, c, K)
                except HopfMackeyError:
                    ok = False
                ok &= bool(check_cor32(R, c, K))
            for g in subrings_of_invertibles(R)[-1].members:
                ok &= bool(check_prop28(R, g, K))
    for gname, rname in [("group_s3", "ks3"), ("group_d4", "kd4")]:
        G, R = load_group(gname), load_ring(rname)
        for M in G.subgroups():
            for g in G.elements:
                ok &= conjugate_subring(R, g, make_subring(R, M)).members == G.conjugate_subgroup(g, M)
    return ok, time.perf_counter() - t0, f"{cases} (c, K) cases"


def criterion5():
    t0 = time.perf_counter()
    cases, ok = 0, True
    for R in fresh_rings().values():
        subs = enumerate_subrings(R)
        for L in subrings_of_invertibles(R):
            for K in subs:
                cases += 1
                ok &= is_mackey_pair(R, L, K).is_pair and bool(check_orbit_law(R, L, K))
    return ok, time.perf_counter() - t0, f"{cases} (L, K) pairs"


def criterion6():
    t0 = time.perf_counter()
    triples, ok, not_pairs = 0, True, 0
    for R in fresh_rings().values():
        subs = enumerate_subrings(R)
        for L in subs:
            for K in subs:
                rows = mackey_rows(R, L, K)
                triples += len(rows)
                ok &= bool(theorem4_inequality(R, L, K))
                cert = is_mackey_pair(R, L, K)
                ok &= cert.is_pair == all(r.lhs == r.rhs for r in rows)
                not_pairs += not cert.is_pair
    return ok, time.perf_counter() - t0, f"{triples} triples, {not_pairs} pairs not Mackey"


def criterion7():
    t0 = time.perf_counter()
    cases, ok = 0, True
    for R in fresh_rings().values():
        for K in enumerate_subrings(R):
            if is_character_normal(R, K):
                cases += 1
                route68 = all(set(K.members) <= set(conjugate_subring(R, c, K).members) for c in range(R.n))
                ok &= bool(check_prop67(R, K)) and is_mackey_pair(R, K, K).verdict == "pair" and route68
    return ok, time.perf_counter() - t0, f"{cases} character-normal subrings"


def criterion8():
    t0 = time.perf_counter()
    rings = fresh_rings()
    expect = {"ks3": load_group("group_s3"), "kd4": load_group("group_d4"), "rep_s3": cyclic_group(1),
              "rep_d4": cyclic_group(2), "rep_q8": cyclic_group(2), "rep_a4": cyclic_group(1)}
    ok, pairs = True, 0
    for name, R in rings.items():
        g = universal_grading(R)
        ok &= is_isomorphic(g.group, expect[name])
        ok &= bool(check_component_dims(g))
        subs = g.group.subgroups()
        ok &= all(check_prop56(g, M, N) for M in subs for N in subs)
        rep, certs = check_theorem61(g)
        ok &= rep.passed and all(c.is_pair for c in certs.values())
        pairs += len(certs)
    return ok, time.perf_counter() - t0, f"{pairs} graded subring pairs"


def criterion9():
    t0 = time.perf_counter()
    worst, ok = 0.0, True
    for R in fresh_rings().values():
        for d in range(R.n):
            err = abs(fp_eigenvalue(R, d, tol=1e-12, max_iter=10_000) - R.dims[d])
            worst = max(worst, err)
            ok &= err < 1e-9
    return ok, time.perf_counter() - t0, f"max error {worst:.1e}"


def criterion10():
    t0 = time.perf_counter()
    cases, ok = 0, True
    for R in fresh_rings().values():
        for K in enumerate_subrings(R):
            cases += 1
            ok &= bool(check_cor15(R, K)) and bool(check_remark21(R, K))
        for d in range(R.n):
            ok &= bool(check_theorem16(R, d))
    return ok, time.perf_counter() - t0, f"{cases} subrings"


@pytest.mark.parametrize("k,fn,limit", [
    (2, criterion2, 10.0), (3, criterion3, 10.0), (4, criterion4, 10.0), (5, criterion5, 10.0),
    (6, criterion6, 10.0), (7, criterion7, 5.0), (8, criterion8, 10.0), (9, criterion9, 5.0),
    (10, criterion10, 10.0),
])
def test_fusion_criteria(k, fn, limit):
    ok, dt, detail = fn()
    assert record(k, ok, dt, limit, detail), ACCEPTANCE[k]


# -- criteria 11-13: classical group identities --------------------------------------
def _oracle(families):
    t0 = time.perf_counter()
    ok, counts = True, {}
    for name in GROUP_NAMES:
        rep, c = exhaustive_oracle(load_group(name), families=families)
        ok &= rep.passed and all(c[f] > 0 for f in families)
        for f in families:
            counts[f] = counts.get(f, 0) + c[f]
    return ok, time.perf_counter() - t0, counts


def criterion11():
    ok, dt, counts = _oracle(("classical_mackey",))
    return ok and counts["classical_mackey"] >= 200, dt, f"{counts['classical_mackey']} triples"


def criterion12():
    ok, dt, counts = _oracle(("prop70",))
    return ok, dt, f"{counts['prop70']} (normal subgroup, irreducible) cases"


def criterion13():
    ok, dt, counts = _oracle(("prop73", "theorem7_group"))
    t0 = time.perf_counter()
    dim_cases = 0
    for R in fresh_rings().values():
        subs = enumerate_subrings(R)
        for L in subs:
            for K in subs:
                if is_mackey_pair(R, L, K):
                    for m in (1, 2, 3):
                        for n in (1, 2, 3):
                            dim_cases += 1
                            ok &= bool(theorem7_dimension_check(R, L, K, m, n))
    dt += time.perf_counter() - t0
    return ok, dt, f"{counts['prop73']} + {counts['theorem7_group']} group cases, {dim_cases} dimension cases"


@pytest.mark.parametrize("k,fn,limit", [(11, criterion11, 30.0), (12, criterion12, 10.0), (13, criterion13, 30.0)])
def test_group_criteria(k, fn, limit):
    ok, dt, detail = fn()
    assert record(k, ok, dt, limit, detail), ACCEPTANCE[k]


# -- criterion 14: Green functor -----------------------------------------------------
def criterion14():
    green_mod._VALIDATED.clear()
    t0 = time.perf_counter()
    ok, mutations, missed = True, 0, []
    for name in ("group_s3", "group_d4"):
        d = classical_instance(load_group(name))
        rep = verify_green(d)
        ok &= rep.passed and len(rep.checks) == 8
        ok &= verify_green(d, seed=GREEN_SEED, axioms=(5,)).passed
        for desc, m in single_entry_mutations(d):
            mutations += 1
            r = verify_green(m, fail_fast=True)
            if r.passed or not any(c.witness for c in r.failures()):
                missed.append((name, desc))
    ok &= not missed
    return ok, time.perf_counter() - t0, f"{mutations} mutations rejected, seed {GREEN_SEED}; missed {missed[:2]}"


def test_criterion_14():
    ok, dt, detail = criterion14()
    assert record(14, ok, dt, 30.0, detail), ACCEPTANCE[14]


if __name__ == "__main__":
    runs = [(1, criterion1, 1.0), (2, criterion2, 10.0), (3, criterion3, 10.0), (4, criterion4, 10.0),
            (5, criterion5, 10.0), (6, criterion6, 10.0), (7, criterion7, 5.0), (8, criterion8, 10.0),
            (9, criterion9, 5.0), (10, criterion10, 10.0), (11, criterion11, 30.0), (12, criterion12, 10.0),
            (13, criterion13, 30.0), (14, criterion14, 30.0)]
    failed = 0
    for k, fn, limit in runs:
        ok, dt, detail = fn()
        failed += not record(k, ok, dt, limit, detail)
        good, text = ACCEPTANCE[k]
        print(f"criterion {k:2d}: {'PASS' if good else 'FAIL'}  {text}")
    sys.exit(1 if failed else 0)
