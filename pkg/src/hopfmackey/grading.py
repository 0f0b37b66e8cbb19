"""Universal grading of a fusion ring and the graded subrings H(M).

The grading is computed intrinsically: the adjoint subring is generated by all
``x x*``, components are the classes of ``y in supp(a x)`` with ``a`` adjoint,
and the group law on components is read off from products of representatives.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .conjugacy import MackeyCertificate, is_mackey_pair
from .cosets import double_cosets
from .errors import GradingInconsistency, MalformedTable, NotASubgroup
from .groups.finite_group import FiniteGroup, Subgroup
from .groups.oracle import check_double_coset_size
from .report import Check, Report
from .ring_core import FusionRing, ring_memo
from .subrings import FusionSubring, generate_subring, is_closed


@ring_memo
def adjoint_subring(ring: FusionRing) -> FusionSubring:
    """Subring generated by the constituents of every x x*."""
    seed = set()
    for x in range(ring.n):
        seed |= ring.support(x, ring.dual[x])
    return generate_subring(ring, seed)


@dataclass(frozen=True)
class Grading:
    ring: FusionRing
    group: FiniteGroup
    deg: tuple[int, ...]                        # basis index -> group element
    components: tuple[tuple[int, ...], ...]     # group element -> basis indices

    @property
    def order(self) -> int:
        return self.group.order

    def component(self, g: int) -> tuple[int, ...]:
        return self.components[g]

    def component_dim(self, g: int) -> int:
        return sum(self.ring.dims[x] ** 2 for x in self.components[g])

    def degree_set(self, members: Iterable[int]) -> Subgroup:
        return tuple(sorted({self.deg[x] for x in members}))


def _components(ring: FusionRing, ad: FusionSubring) -> list[list[int]]:
    parent = list(range(ring.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for x in range(ring.n):
        for a in ad.members:
            for y in ring.support(a, x):
                rx, ry = find(x), find(y)
                if rx != ry:
                    parent[max(rx, ry)] = min(rx, ry)
    groups: dict[int, list[int]] = {}
    for x in range(ring.n):
        groups.setdefault(find(x), []).append(x)
    comps = sorted(groups.values(), key=lambda C: C[0])
    # identity component first, the rest by least member index
    unit_comp = next(C for C in comps if ring.unit in C)
    return [unit_comp] + [C for C in comps if C is not unit_comp]


@ring_memo
def universal_grading(ring: FusionRing) -> Grading:
    ad = adjoint_subring(ring)
    comps = _components(ring, ad)
    if sorted(comps[0]) != list(ad.members):
        raise GradingInconsistency("identity component differs from the adjoint subring",
                                   witness=(tuple(comps[0]), ad.members))
    deg = [0] * ring.n
    for g, C in enumerate(comps):
        for x in C:
            deg[x] = g
    k = len(comps)
    table = [[-1] * k for _ in range(k)]
    for x in range(ring.n):
        for y in range(ring.n):
            degs = {deg[z] for z in ring.support(x, y)}
            if len(degs) != 1:
                raise GradingInconsistency("product spans several components", witness=(x, y, sorted(degs)))
            z = degs.pop()
            i, j = deg[x], deg[y]
            if table[i][j] == -1:
                table[i][j] = z
            elif table[i][j] != z:
                raise GradingInconsistency("component product depends on representatives", witness=(x, y))
    try:
        U = FiniteGroup(table, name=f"U({ring.name})", labels=[ring.basis[C[0]] for C in comps])
    except MalformedTable as exc:
        raise GradingInconsistency(f"component products do not form a group: {exc}") from None
    grading = Grading(ring, U, tuple(deg), tuple(tuple(C) for C in comps))
    inv = check_grading_invariants(grading)
    if not inv:
        raise GradingInconsistency(f"grading invariant {inv.detail} fails", witness=inv.witness)
    return grading


def check_grading_invariants(grading: Grading) -> Check:
    """Degree additivity on supports, deg(unit) = e, deg(x*) = deg(x)^-1."""
    R, U, deg = grading.ring, grading.group, grading.deg
    if deg[R.unit] != 0:
        return Check("grading_invariants", False, R.unit, "unit")
    for x in range(R.n):
        if deg[R.dual[x]] != U.inv(deg[x]):
            return Check("grading_invariants", False, x, "dual")
        for y in range(R.n):
            for z in R.support(x, y):
                if deg[z] != U.mul(deg[x], deg[y]):
                    return Check("grading_invariants", False, (x, y, z), "additivity")
    if tuple(grading.components[0]) != adjoint_subring(R).members:
        return Check("grading_invariants", False, grading.components[0], "identity component")
    return Check("grading_invariants", True)


def graded_subring(grading: Grading, M: Iterable[int]) -> FusionSubring:
    """Union of the components with degree in the subgroup M."""
    U = grading.group
    M = tuple(sorted(set(M)))
    if not U.is_subgroup(M):
        raise NotASubgroup(f"{[U.labels[g] for g in M]} is not a subgroup of the grading group")
    members = [x for g in M for x in grading.components[g]]
    if not is_closed(grading.ring, members):
        raise GradingInconsistency("graded subring is not closed", witness=M)
    return FusionSubring(grading.ring, tuple(members))


def check_prop56(grading: Grading, M: Iterable[int], N: Iterable[int]) -> Check:
    """Double cosets of (H(M), H(N)) correspond to the group double cosets M x N.

    Each ring double coset must be exactly the union of the components whose
    degree lies in one group double coset, and the assignment must be bijective.
    """
    U, R = grading.group, grading.ring
    M, N = U.check_subgroup(M), U.check_subgroup(N)
    HM, HN = graded_subring(grading, M), graded_subring(grading, N)
    ring_classes = double_cosets(R, HM, HN).classes
    group_classes = U.double_cosets(M, N)
    if len(ring_classes) != len(group_classes):
        return Check("prop56", False, (len(ring_classes), len(group_classes)), "count")
    hit = set()
    for C in ring_classes:
        D = next(D for D in group_classes if grading.deg[C[0]] in D)
        expect = tuple(sorted(x for g in D for x in grading.components[g]))
        if tuple(C) != expect:
            return Check("prop56", False, (C, D), "class is not the union of components")
        hit.add(D)
    if len(hit) != len(group_classes):
        return Check("prop56", False, None, "not bijective")
    return Check("prop56", True)


def check_theorem61(grading: Grading) -> tuple[Report, dict[tuple[Subgroup, Subgroup], MackeyCertificate]]:
    """Every pair (H(M), H(N)) over subgroups of U is a Mackey pair.

    Also checks the double-coset size identity directly in U.
    """
    U, R = grading.group, grading.ring
    subs = U.subgroups()
    H = {M: graded_subring(grading, M) for M in subs}
    report = Report()
    certs = {}
    for M in subs:
        for N in subs:
            cert = is_mackey_pair(R, H[M], H[N])
            certs[(M, N)] = cert
            report.add(Check("theorem61_pair", cert.is_pair,
                             None if cert.is_pair else (M, N, cert.first_failure)))
            size = check_double_coset_size(U, M, N)
            report.add(Check("theorem61_group_sizes", size.passed, size.witness))
    return report, certs


def check_component_dims(grading: Grading) -> Check:
    """All components have dimension TotalDimension / |U|."""
    R = grading.ring
    dims = [grading.component_dim(g) for g in grading.group.elements]
    target, rem = divmod(R.total_dimension, grading.order)
    ok = rem == 0 and all(d == target for d in dims)
    return Check("component_dims", ok, None if ok else dims)


def check_intersections(grading: Grading) -> Check:
    """H(M) cap H(N) = H(M cap N) for all subgroup pairs."""
    U = grading.group
    subs = U.subgroups()
    for M in subs:
        for N in subs:
            a = set(graded_subring(grading, M).members) & set(graded_subring(grading, N).members)
            b = set(graded_subring(grading, U.intersection(M, N)).members)
            if a != b:
                return Check("graded_intersections", False, (M, N))
    return Check("graded_intersections", True)
