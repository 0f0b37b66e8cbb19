"""Mackey and Green functor data over a subgroup lattice, and an exhaustive axiom checker.

Maps are nonnegative integer matrices acting on coefficient vectors in the
distinguished bases (column j is the image of basis element j).  All axioms are
linear or bilinear, so checking them on basis elements is sufficient.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Mapping

from .errors import IncompleteRepData, LatticeMismatch, MalformedDatum
from .groups.characters import character_table, conjugate_char, induce, inner, restrict
from .groups.finite_group import FiniteGroup, Subgroup
from .groups.fusion import character_fusion_ring
from .report import Check, Report
from .ring_core import FusionRing, validate_ring

Matrix = tuple[tuple[int, ...], ...]
MAX_WITNESSES = 50
_VALIDATED: set[FusionRing] = set()      # rings already known to satisfy the axioms


@dataclass
class GreenFunctorDatum:
    group: FiniteGroup
    subgroups: tuple[Subgroup, ...]
    rings: dict[Subgroup, FusionRing]
    induction: dict[tuple[Subgroup, Subgroup], Matrix]      # (K, L), K <= L:  M(K) -> M(L)
    restriction: dict[tuple[Subgroup, Subgroup], Matrix]    # (L, K), K <= L:  M(L) -> M(K)
    conjugation: dict[tuple[int, Subgroup], Matrix]         # (g, K):          M(K) -> M(gKg^-1)
    name: str = ""
    _check: bool = field(default=True, repr=False)

    def __post_init__(self):
        if self._check:
            check_datum(self)

    def rank(self, K: Subgroup) -> int:
        return self.rings[K].n

    def copy(self) -> GreenFunctorDatum:
        return GreenFunctorDatum(self.group, self.subgroups, dict(self.rings), dict(self.induction),
                                 dict(self.restriction), dict(self.conjugation), self.name, _check=False)


def _pairs(subgroups):
    return [(K, L) for L in subgroups for K in subgroups if set(K) <= set(L)]


def check_datum(d: GreenFunctorDatum) -> None:
    """Shapes, key coverage and entry types; raises MalformedDatum."""
    G = d.group
    subs = tuple(d.subgroups)
    if sorted(subs, key=lambda s: (len(s), s)) != list(subs) or len(set(subs)) != len(subs):
        raise MalformedDatum("subgroups must be distinct and sorted by (order, elements)")
    for S in subs:
        if not G.is_subgroup(S):
            raise MalformedDatum(f"{list(S)} is not a subgroup")
    closed = set(subs)
    for g in G.elements:
        for S in subs:
            if G.conjugate_subgroup(g, S) not in closed:
                raise MalformedDatum(f"lattice is not closed under conjugation at {list(S)}")
    for S in subs:
        if S not in d.rings:
            raise MalformedDatum(f"no ring for subgroup {list(S)}")
        if d.rings[S] in _VALIDATED:
            continue
        rep = validate_ring(d.rings[S])
        if not rep:
            f = rep.failures()[0]
            raise MalformedDatum(f"ring for {list(S)} fails {f.name}", witness=f.witness)
        _VALIDATED.add(d.rings[S])

    def shape(M, rows, cols, what):
        if (not isinstance(M, (list, tuple)) or len(M) != rows
                or any(not isinstance(r, (list, tuple)) or len(r) != cols for r in M)):
            raise MalformedDatum(f"{what}: expected a {rows}x{cols} matrix")
        for r in M:
            for x in r:
                if not isinstance(x, int) or isinstance(x, bool) or x < 0:
                    raise MalformedDatum(f"{what}: entries must be nonnegative integers")

    for K, L in _pairs(subs):
        if (K, L) not in d.induction:
            raise MalformedDatum(f"missing induction {list(K)} -> {list(L)}")
        if (L, K) not in d.restriction:
            raise MalformedDatum(f"missing restriction {list(L)} -> {list(K)}")
        shape(d.induction[(K, L)], d.rank(L), d.rank(K), f"induction {list(K)} -> {list(L)}")
        shape(d.restriction[(L, K)], d.rank(K), d.rank(L), f"restriction {list(L)} -> {list(K)}")
    for g in G.elements:
        for K in subs:
            if (g, K) not in d.conjugation:
                raise MalformedDatum(f"missing conjugation by {g} on {list(K)}")
            gK = G.conjugate_subgroup(g, K)
            shape(d.conjugation[(g, K)], d.rank(gK), d.rank(K), f"conjugation by {g} on {list(K)}")


# -- small integer linear algebra ------------------------------------------
def _apply(M: Matrix, v: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(sum(row[j] * v[j] for j in range(len(v)) if v[j]) for row in M)


def _column(M: Matrix, j: int) -> tuple[int, ...]:
    return tuple(row[j] for row in M)


def _compose(A: Matrix, B: Matrix) -> Matrix:
    """A after B."""
    cols = len(B[0]) if B else 0
    inner_n = len(B)
    return tuple(tuple(sum(A[i][k] * B[k][j] for k in range(inner_n)) for j in range(cols))
                 for i in range(len(A)))


def _identity(n: int) -> Matrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def _unit_vector(n: int, i: int) -> tuple[int, ...]:
    return tuple(int(k == i) for k in range(n))


def _add(u, v):
    return tuple(a + b for a, b in zip(u, v))


class _Mult:
    """Bilinear product on integer coefficient vectors of a fusion ring."""

    def __init__(self, ring: FusionRing):
        self.n = ring.n
        self.table = [[tuple(ring.product(i, j).get(k, 0) for k in range(ring.n)) for j in range(ring.n)]
                      for i in range(ring.n)]
        self.unit = _unit_vector(ring.n, ring.unit)

    def __call__(self, u, v):
        out = [0] * self.n
        for i, a in enumerate(u):
            if not a:
                continue
            for j, b in enumerate(v):
                if not b:
                    continue
                for k, m in enumerate(self.table[i][j]):
                    if m:
                        out[k] += a * b * m
        return tuple(out)


# -- axioms -----------------------------------------------------------------
class _Collector:
    def __init__(self, fail_fast: bool):
        self.fail_fast = fail_fast
        self.witnesses: dict[int, list] = {k: [] for k in range(1, 9)}

    def fail(self, axiom: int, witness) -> bool:
        """Record a failure; True means stop."""
        if len(self.witnesses[axiom]) < MAX_WITNESSES:
            self.witnesses[axiom].append(witness)
        return self.fail_fast


def double_coset_representatives(G: FiniteGroup, L: Subgroup, K: Subgroup, J: Subgroup,
                                 rng: random.Random | None = None) -> list[int]:
    """Representatives of L\\K/J (least element, or random members when ``rng`` is given)."""
    seen, reps = set(), []
    for g in K:
        if g in seen:
            continue
        D = sorted({G.prod(l, g, j) for l in L for j in J})
        seen.update(D)
        reps.append(rng.choice(D) if rng is not None else D[0])
    return reps


def verify_green(datum: GreenFunctorDatum, fail_fast: bool = False, seed: int | None = None,
                 axioms: tuple[int, ...] = tuple(range(1, 9))) -> Report:
    """Check axioms (1)-(8) exhaustively on basis elements.

    With ``seed`` the Mackey axiom (5) uses random double-coset representatives
    drawn from ``random.Random(seed)``; otherwise least-element ones.
    """
    check_datum(datum)
    G, subs = datum.group, datum.subgroups
    I, R, C = datum.induction, datum.restriction, datum.conjugation
    mult = {S: _Mult(datum.rings[S]) for S in subs}
    rank = {S: datum.rank(S) for S in subs}
    col = _Collector(fail_fast)
    rng = random.Random(seed) if seed is not None else None
    pairs = _pairs(subs)

    def run() -> None:
        # (1) identities
        if 1 in axioms:
            for S in subs:
                e = _identity(rank[S])
                if I[(S, S)] != e and col.fail(1, {"map": "I", "H": S}):
                    return
                if R[(S, S)] != e and col.fail(1, {"map": "R", "H": S}):
                    return
                for h in S:
                    if C[(h, S)] != e and col.fail(1, {"map": "c", "H": S, "h": h}):
                        return
        # (4) c_{K,g} c_{K,h} = c_{K,gh}, composition read on the conjugated subgroup
        if 4 in axioms:
            for K in subs:
                for g in G.elements:
                    for h in G.elements:
                        hK = G.conjugate_subgroup(h, K)
                        if _compose(C[(g, hK)], C[(h, K)]) != C[(G.mul(g, h), K)]:
                            if col.fail(4, {"K": K, "g": g, "h": h}):
                                return
        # (2), (3) transitivity along chains J <= K <= H
        if 2 in axioms or 3 in axioms:
            for J, K in pairs:
                for K2, H in pairs:
                    if K2 != K:
                        continue
                    if 2 in axioms and _compose(R[(K, J)], R[(H, K)]) != R[(H, J)]:
                        if col.fail(2, {"J": J, "K": K, "H": H}):
                            return
                    if 3 in axioms and _compose(I[(K, H)], I[(J, K)]) != I[(J, H)]:
                        if col.fail(3, {"J": J, "K": K, "H": H}):
                            return
        # (7), (8) Frobenius projection identities
        if 7 in axioms or 8 in axioms:
            for K, L in pairs:
                mK, mL = mult[K], mult[L]
                Ikl, Rlk = I[(K, L)], R[(L, K)]
                for a in range(rank[K]):
                    ea = _unit_vector(rank[K], a)
                    Ia = _column(Ikl, a)
                    for b in range(rank[L]):
                        eb = _unit_vector(rank[L], b)
                        Rb = _column(Rlk, b)
                        if 7 in axioms and _apply(Ikl, mK(ea, Rb)) != mL(Ia, eb):
                            if col.fail(7, {"K": K, "L": L, "a": a, "b": b}):
                                return
                        if 8 in axioms and _apply(Ikl, mK(Rb, ea)) != mL(eb, Ia):
                            if col.fail(8, {"K": K, "L": L, "a": a, "b": b}):
                                return
        # (5) Mackey axiom: R^K_L I^K_J = sum over x in L\K/J of I^L_{L cap xJ} R^{xJ}_{xJ cap L} c_{J,x}
        if 5 in axioms:
            for K in subs:
                inside = [S for S in subs if set(S) <= set(K)]
                for J in inside:
                    for L in inside:
                        lhs = _compose(R[(K, L)], I[(J, K)])
                        rhs = tuple(tuple(0 for _ in range(rank[J])) for _ in range(rank[L]))
                        for x in double_coset_representatives(G, L, K, J, rng):
                            xJ = G.conjugate_subgroup(x, J)
                            meet = G.intersection(L, xJ)
                            term = _compose(I[(meet, L)], _compose(R[(xJ, meet)], C[(x, J)]))
                            rhs = tuple(_add(r, t) for r, t in zip(rhs, term))
                        if lhs != rhs:
                            bad = next(a for a in range(rank[J]) if any(lhs[i][a] != rhs[i][a] for i in range(rank[L])))
                            if col.fail(5, {"J": J, "K": K, "L": L, "a": bad}):
                                return
        # (6) R and c are unital ring maps (bilinear, so checked after the linear axioms)
        if 6 in axioms:
            maps = [("R", (L, K), R[(L, K)], L, K) for K, L in pairs]
            maps += [("c", (g, K), C[(g, K)], K, G.conjugate_subgroup(g, K)) for g in G.elements for K in subs]
            for kind, key, M, src, dst in maps:
                ms, md = mult[src], mult[dst]
                if _apply(M, ms.unit) != md.unit and col.fail(6, {"map": kind, "key": key, "unit": True}):
                    return
                for a in range(rank[src]):
                    Ma = _column(M, a)
                    for b in range(rank[src]):
                        if _apply(M, ms.table[a][b]) != md(Ma, _column(M, b)):
                            if col.fail(6, {"map": kind, "key": key, "a": a, "b": b}):
                                return

    run()
    report = Report()
    for k in axioms:
        w = col.witnesses[k]
        report.add(Check(f"axiom{k}", not w, w or None, f"{len(w)} witnesses" if w else ""))
    return report


# -- instances --------------------------------------------------------------
def _decompose_matrix(images, table) -> Matrix:
    """Columns: multiplicities of each irreducible of ``table`` in each image character."""
    cols = [[inner(img, psi) for psi in table.irreducibles] for img in images]
    for c in cols:
        for m in c:
            if m.denominator != 1 or m < 0:
                raise MalformedDatum(f"non-integral multiplicity {m}")
    return tuple(tuple(int(cols[j][i]) for j in range(len(cols))) for i in range(len(table.irreducibles)))


def classical_instance(G: FiniteGroup) -> GreenFunctorDatum:
    """Character rings of all subgroups with induction, restriction and conjugation."""
    subs = tuple(G.subgroups())
    tables = {S: character_table(G, S) for S in subs}
    rings = {}
    for S in subs:
        k = subs.index(S)
        rings[S] = character_fusion_ring(tables[S], [f"H{k}.{i}" for i in range(len(tables[S].irreducibles))],
                                         name=f"R({G.name}:H{k})")
    induction, restriction, conjugation = {}, {}, {}
    for K, L in _pairs(subs):
        induction[(K, L)] = _decompose_matrix([induce(chi, L) for chi in tables[K].irreducibles], tables[L])
        restriction[(L, K)] = _decompose_matrix([restrict(psi, K) for psi in tables[L].irreducibles], tables[K])
    for g in G.elements:
        for K in subs:
            gK = G.conjugate_subgroup(g, K)
            conjugation[(g, K)] = _decompose_matrix([conjugate_char(chi, g) for chi in tables[K].irreducibles],
                                                    tables[gK])
    return GreenFunctorDatum(G, subs, rings, induction, restriction, conjugation, name=f"classical({G.name})")


def grading_instance(ring: FusionRing, repdata: GreenFunctorDatum) -> GreenFunctorDatum:
    """Assemble a datum over the universal grading group of ``ring`` from supplied K_0 data.

    The supplied group must be the grading group with its canonical labelling;
    nothing is computed beyond consistency of the lattice.
    """
    from .grading import universal_grading

    U = universal_grading(ring).group
    if repdata.group.table != U.table:
        raise LatticeMismatch(f"datum group (order {repdata.group.order}) is not the grading group "
                              f"(order {U.order}) in canonical labelling")
    expect = tuple(U.subgroups())
    missing = [S for S in expect if S not in repdata.rings]
    if missing:
        raise IncompleteRepData(f"no representation data for subgroups {[list(S) for S in missing]}",
                                witness=missing)
    if tuple(repdata.subgroups) != expect:
        raise LatticeMismatch("datum subgroups differ from the subgroups of the grading group")
    return GreenFunctorDatum(U, expect, dict(repdata.rings), dict(repdata.induction), dict(repdata.restriction),
                             dict(repdata.conjugation), name=f"graded({ring.name})")


def single_entry_mutations(datum: GreenFunctorDatum):
    """Yield (description, mutated datum) for +1 at every entry and -1 at every positive entry."""
    for attr in ("induction", "restriction", "conjugation"):
        maps: Mapping = getattr(datum, attr)
        for key, M in maps.items():
            for i, row in enumerate(M):
                for j, x in enumerate(row):
                    for delta in (1, -1):
                        if x + delta < 0:
                            continue
                        new = tuple(tuple(x + delta if (a, b) == (i, j) else y for b, y in enumerate(r))
                                    for a, r in enumerate(M))
                        d = datum.copy()
                        getattr(d, attr)[key] = new
                        yield (attr, key, i, j, delta), d
