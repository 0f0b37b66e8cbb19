"""Conjugate subrings, Mackey-pair certificates and their dimension-level consequences."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .config import DEFAULT
from .cosets import double_cosets, product_support, right_cosets
from .errors import ClosureViolation, NotMackeyPair, NotNormal
from .report import Check
from .ring_core import FusionRing, ring_memo
from .subrings import FusionSubring, enumerate_subrings, integral, intersect, is_closed


@dataclass(frozen=True)
class ConjugateSubring:
    base: FusionSubring
    at: int
    result: FusionSubring

    @property
    def members(self):
        return self.result.members


@ring_memo
def conjugate_subring(ring: FusionRing, c: int, K: FusionSubring) -> ConjugateSubring:
    """{d : d (c Lambda_K) = eps(d) c Lambda_K}, re-verified to be a subring."""
    ring.check_index(c)
    x = ring.basis_element(c) * integral(K).normalized
    members = [d for d in range(ring.n) if ring.basis_element(d) * x == x.scale(ring.dims[d])]
    if not is_closed(ring, members):
        raise ClosureViolation(f"conjugate of {K} at {ring.basis[c]} is not closed", witness=(c, K.members))
    return ConjugateSubring(K, c, FusionSubring(ring, tuple(members)))


def check_prop28(ring: FusionRing, g: int, K: FusionSubring) -> Check:
    """For grouplike g the conjugate subring is g K g^-1."""
    if ring.dims[g] != 1:
        raise ValueError(f"{ring.basis[g]} is not invertible")
    conj = set(conjugate_subring(ring, g, K).members)
    expect = set()
    for x in K.members:
        s = product_support(ring, [g], [x], [ring.dual[g]])
        if len(s) != 1:
            return Check("prop28", False, (g, x))
        expect |= s
    return Check("prop28", conj == expect, None if conj == expect else (g, sorted(conj), sorted(expect)))


def check_theorem33_maximality(ring: FusionRing, c: int, K: FusionSubring,
                               max_basis: int = DEFAULT.max_basis) -> Check:
    """The conjugate subring is the largest L with supp(L c) inside the coset of c."""
    cK = conjugate_subring(ring, c, K).result
    coset = set(right_cosets(ring, K).class_of(c))
    if not product_support(ring, cK.members, [c]) <= coset:
        return Check("theorem33", False, ("conjugate", c))
    for L in enumerate_subrings(ring, max_basis):
        if product_support(ring, L.members, [c]) <= coset and not L <= cK:
            return Check("theorem33", False, (c, L.members))
    return Check("theorem33", True)


def check_cor32(ring: FusionRing, c: int, K: FusionSubring) -> Check:
    """The conjugate subring lies in supp(c K c*)."""
    cK = set(conjugate_subring(ring, c, K).members)
    triple = product_support(ring, [c], K.members, [ring.dual[c]])
    return Check("cor32", cK <= triple, None if cK <= triple else (c, sorted(cK - triple)))


@dataclass(frozen=True)
class MackeyRow:
    c: int
    dim_LCK: int
    dim_L: int
    dim_CK: int
    dim_meet: int       # dim (L cap cK)

    @property
    def lhs(self) -> int:
        return self.dim_LCK * self.dim_meet

    @property
    def rhs(self) -> int:
        return self.dim_L * self.dim_CK

    def as_dict(self):
        return {"c": self.c, "dim_LCK": self.dim_LCK, "dim_L": self.dim_L, "dim_CK": self.dim_CK,
                "dim_meet": self.dim_meet, "lhs": self.lhs, "rhs": self.rhs}


@dataclass(frozen=True)
class MackeyCertificate:
    L: FusionSubring
    K: FusionSubring
    rows: tuple[MackeyRow, ...]

    @property
    def is_pair(self) -> bool:
        return all(r.lhs == r.rhs for r in self.rows)

    @property
    def verdict(self) -> str:
        return "pair" if self.is_pair else "not-pair"

    @property
    def holds_at_representatives(self) -> bool:
        """The identity restricted to least-index double-coset representatives."""
        reps = set(double_cosets(self.K.parent, self.L, self.K).representatives)
        return all(r.lhs == r.rhs for r in self.rows if r.c in reps)

    @property
    def first_failure(self) -> int | None:
        for r in self.rows:
            if r.lhs != r.rhs:
                return r.c
        return None

    def __bool__(self):
        return self.is_pair


@ring_memo
def mackey_rows(ring: FusionRing, L: FusionSubring, K: FusionSubring) -> tuple[MackeyRow, ...]:
    dbl = double_cosets(ring, L, K)
    right = right_cosets(ring, K)
    rows = []
    for c in range(ring.n):
        meet = intersect(L, conjugate_subring(ring, c, K).result)
        rows.append(MackeyRow(c, dbl.dim_of(c), L.dim, right.dim_of(c), meet.dim))
    return tuple(rows)


def is_mackey_pair(ring: FusionRing, L: FusionSubring, K: FusionSubring) -> MackeyCertificate:
    """dim LCK * dim(L cap cK) == dim L * dim CK at every basis element c."""
    return MackeyCertificate(L, K, mackey_rows(ring, L, K))


def theorem4_inequality(ring: FusionRing, L: FusionSubring, K: FusionSubring) -> Check:
    """dim LCK * dim(L cap cK) <= dim L * dim CK for every c (surjectivity bound)."""
    bad = [r.c for r in mackey_rows(ring, L, K) if r.lhs > r.rhs]
    return Check("theorem4", not bad, bad or None)


def is_character_normal(ring: FusionRing, K: FusionSubring) -> Check:
    """Lambda_K is central in the fusion ring."""
    lam = integral(K).normalized
    for d in range(ring.n):
        b = ring.basis_element(d)
        if lam * b != b * lam:
            return Check("character_normal", False, d)
    return Check("character_normal", True)


def check_prop67(ring: FusionRing, K: FusionSubring) -> Check:
    """(K, K) is a Mackey pair and K lies in every conjugate cK; both must agree."""
    if not is_character_normal(ring, K):
        raise NotNormal(f"{K} is not character-normal")
    route68 = all(set(K.members) <= set(conjugate_subring(ring, c, K).members) for c in range(ring.n))
    cert = is_mackey_pair(ring, K, K)
    ok = route68 and cert.is_pair
    return Check("prop67", ok, None if ok else {"containment": route68, "mackey": cert.verdict,
                                                "first_failure": cert.first_failure})


def theorem7_sides(ring: FusionRing, L: FusionSubring, K: FusionSubring, dimM: int, dimN: int) -> tuple[Fraction, Fraction]:
    H = Fraction(ring.total_dimension)
    lhs = (H / K.dim * dimM) * (H / L.dim * dimN)
    right = right_cosets(ring, K)
    rhs = Fraction(0)
    for C in double_cosets(ring, L, K).classes:
        c = C[0]
        meet = intersect(L, conjugate_subring(ring, c, K).result)
        rhs += (H / meet.dim) * (Fraction(right.dim_of(c), K.dim) * dimM) * dimN
    return lhs, rhs


def theorem7_dimension_check(ring: FusionRing, L: FusionSubring, K: FusionSubring, dimM: int, dimN: int) -> Check:
    """Dimension form of the tensor product formula for induced modules of a Mackey pair."""
    if not is_mackey_pair(ring, L, K):
        raise NotMackeyPair(f"({L}, {K}) is not a Mackey pair")
    lhs, rhs = theorem7_sides(ring, L, K, dimM, dimN)
    return Check("theorem7_dimension", lhs == rhs, {"lhs": lhs, "rhs": rhs})


def stabilizer_in(ring: FusionRing, G: FusionSubring, c: int, K: FusionSubring) -> tuple[int, ...]:
    """{g in G : g (c Lambda_K) = c Lambda_K} for a subring G of grouplikes."""
    x = ring.basis_element(c) * integral(K).normalized
    return tuple(g for g in G.members if ring.basis_element(g) * x == x)


def check_orbit_law(ring: FusionRing, G: FusionSubring, K: FusionSubring) -> Check:
    """|S| * |G_C| = |G| for every c, S the right cosets inside the double coset GCK."""
    dbl = double_cosets(ring, G, K)
    for k, C in enumerate(dbl.classes):
        S = dbl.constituents[k]
        for c in C:
            stab = stabilizer_in(ring, G, c, K)
            meet = intersect(G, conjugate_subring(ring, c, K).result)
            if len(S) * len(stab) != len(G.members) or stab != meet.members:
                return Check("orbit_law", False, (c, len(S), len(stab)))
    return Check("orbit_law", True)


def check_prop34(ring: FusionRing, K: FusionSubring) -> Check:
    """Elements of one right coset have the same conjugate subring."""
    for C in right_cosets(ring, K).classes:
        ref = conjugate_subring(ring, C[0], K).members
        for d in C[1:]:
            if conjugate_subring(ring, d, K).members != ref:
                return Check("prop34", False, (C[0], d))
    return Check("prop34", True)


def check_remark39(ring: FusionRing, L: FusionSubring, K: FusionSubring) -> Check:
    """dim(L cap dK) dim CK == dim(L cap cK) dim DK within each double coset."""
    rows = {r.c: r for r in mackey_rows(ring, L, K)}
    for C in double_cosets(ring, L, K).classes:
        a = rows[C[0]]
        for d in C[1:]:
            b = rows[d]
            if b.dim_meet * a.dim_CK != a.dim_meet * b.dim_CK:
                return Check("remark39", False, (C[0], d))
    return Check("remark39", True)


def check_remark30(ring: FusionRing, K: FusionSubring) -> Check:
    """On commutative rings K lies in every conjugate subring."""
    for c in range(ring.n):
        if not set(K.members) <= set(conjugate_subring(ring, c, K).members):
            return Check("remark30", False, c)
    return Check("remark30", True)
