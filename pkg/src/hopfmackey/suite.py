"""The full invariant battery for one fusion ring, in a fixed order.

Each family contributes one Check carrying the first failing witness, so a
single report (and certificate) summarizes a ring.
"""
from __future__ import annotations

from typing import Callable, Iterable

from .config import DEFAULT, Settings
from .conjugacy import (check_cor32, check_orbit_law, check_prop28, check_prop34, check_prop67,
                        check_remark30, check_theorem33_maximality, conjugate_subring, is_character_normal,
                        is_mackey_pair, theorem4_inequality)
from .cosets import (check_cor15, check_double_union, check_partition, check_remark21, check_support_saturation,
                     check_theorem16, coset_rank, crosscheck_prop10, double_cosets, right_cosets)
from .errors import HopfMackeyError
from .grading import (check_component_dims, check_grading_invariants, check_intersections, check_prop56,
                      check_theorem61, universal_grading)
from .report import Check, Report
from .ring_core import FusionRing, fp_eigenvalue, validate_ring
from .subrings import enumerate_subrings, subrings_of_invertibles


def _family(name: str, checks: Iterable[Callable[[], Check | bool]]) -> Check:
    """Run lazily supplied checks, stopping at the first failure or error."""
    count = 0
    for thunk in checks:
        count += 1
        try:
            res = thunk()
        except HopfMackeyError as exc:
            return Check(name, False, getattr(exc, "witness", None), f"{type(exc).__name__}: {exc}")
        if not res:
            witness = res.witness if isinstance(res, Check) else None
            return Check(name, False, witness, getattr(res, "name", ""))
    return Check(name, True, None, f"{count} cases")


def _rank_integrality(ring, K):
    part = right_cosets(ring, K)
    for k in range(len(part)):
        coset_rank(part, k)
    return True


def _fp(ring: FusionRing, d: int, settings: Settings) -> Check:
    val = fp_eigenvalue(ring, d, settings.tol, settings.max_iter)
    err = abs(val - ring.dims[d])
    return Check("fp_eigenvalue", err < settings.tol, None if err < settings.tol else (d, repr(val)))


def hopf_check(ring: FusionRing, settings: Settings = DEFAULT) -> tuple[Report, dict]:
    """Run every invariant on ``ring``; returns the report and an informational summary.

    The summary lists Mackey-pair verdicts for all subring pairs; a pair that is
    not Mackey is not by itself a failure, since no theorem asserts it.
    """
    report = Report()
    axioms = validate_ring(ring)
    report.add(Check("ring_axioms", axioms.passed,
                     None if axioms else [(c.name, c.witness) for c in axioms.failures()]))
    if not axioms:
        return report, {}
    subs = enumerate_subrings(ring, settings.max_basis)
    n = ring.n
    invertible = subrings_of_invertibles(ring)

    def partitions():
        for K in subs:
            yield lambda K=K: check_partition(ring, right_cosets(ring, K))
            yield lambda K=K: check_support_saturation(ring, right_cosets(ring, K))
            for L in subs:
                yield lambda L=L, K=K: check_partition(ring, double_cosets(ring, L, K))
                yield lambda L=L, K=K: check_double_union(ring, double_cosets(ring, L, K))

    report.add(_family("coset_partitions", partitions()))
    report.add(_family("rank_integrality", (lambda K=K: _rank_integrality(ring, K) for K in subs)))
    report.add(_family("prop10", (lambda L=L, K=K: crosscheck_prop10(ring, L, K) for L in subs for K in subs)))
    report.add(_family("conjugate_closure",
                       (lambda c=c, K=K: conjugate_subring(ring, c, K) is not None for c in range(n) for K in subs)))
    report.add(_family("cor32", (lambda c=c, K=K: check_cor32(ring, c, K) for c in range(n) for K in subs)))
    report.add(_family("prop34", (lambda K=K: check_prop34(ring, K) for K in subs)))
    if ring.is_commutative():
        report.add(_family("remark30", (lambda K=K: check_remark30(ring, K) for K in subs)))
    report.add(_family("prop28", (lambda g=g, K=K: check_prop28(ring, g, K)
                                  for g in invertible[-1].members for K in subs)))
    if n <= settings.max_basis:
        report.add(_family("theorem33", (lambda c=c, K=K: check_theorem33_maximality(ring, c, K, settings.max_basis)
                                         for c in range(n) for K in subs)))

    def theorem2():
        for L in invertible:
            for K in subs:
                yield lambda L=L, K=K: Check("theorem2", is_mackey_pair(ring, L, K).is_pair, (L.members, K.members))
                yield lambda L=L, K=K: check_orbit_law(ring, L, K)

    report.add(_family("theorem2", theorem2()))
    report.add(_family("theorem4", (lambda L=L, K=K: theorem4_inequality(ring, L, K) for L in subs for K in subs)))
    normal = [K for K in subs if is_character_normal(ring, K)]
    report.add(_family("prop67", (lambda K=K: check_prop67(ring, K) for K in normal)))

    grading = universal_grading(ring)
    U = grading.group
    usubs = U.subgroups(settings.max_group_order)
    report.add(check_grading_invariants(grading))
    report.add(check_component_dims(grading))
    report.add(check_intersections(grading))
    report.add(_family("prop56", (lambda M=M, N=N: check_prop56(grading, M, N) for M in usubs for N in usubs)))
    t61, _ = check_theorem61(grading)
    report.add(Check("theorem61", t61.passed, [c.witness for c in t61.failures()][:1] or None))

    report.add(_family("fp_eigenvalues", (lambda d=d: _fp(ring, d, settings) for d in range(n))))
    report.add(_family("cor15", (lambda K=K: check_cor15(ring, K) for K in subs)))
    report.add(_family("theorem16", (lambda d=d: check_theorem16(ring, d) for d in range(n))))
    report.add(_family("remark21", (lambda K=K: check_remark21(ring, K) for K in subs)))

    pairs = {}
    for L in subs:
        for K in subs:
            cert = is_mackey_pair(ring, L, K)
            pairs[f"{L!r} x {K!r}"] = cert.verdict
    summary = {
        "ring": ring.name,
        "subrings": len(subs),
        "grading_order": U.order,
        "mackey_pairs": sum(v == "pair" for v in pairs.values()),
        "subring_pairs": len(pairs),
        "not_pairs": sorted(k for k, v in pairs.items() if v != "pair"),
        "passed": sum(c.passed for c in report),
        "total": len(report.checks),
    }
    return report, summary
