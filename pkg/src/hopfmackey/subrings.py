"""Fusion subrings (the character-level model of Hopf subalgebras) and integrals."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable

from .config import DEFAULT
from .errors import BasisTooLarge, IntegralPropertyFailure, InvertibleClosureFailure, RingMismatch, ClosureViolation
from .ring_core import FusionRing, RingElement, ring_memo


def is_closed(ring: FusionRing, members: Iterable[int]) -> bool:
    X = frozenset(members)
    if ring.unit not in X:
        return False
    if any(ring.dual[x] not in X for x in X):
        return False
    return all(ring.support(c, d) <= X for c in X for d in X)


@dataclass(frozen=True)
class FusionSubring:
    parent: FusionRing = field(compare=False, repr=False)
    members: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "members", tuple(sorted(set(self.members))))

    @property
    def dim(self) -> int:
        return sum(self.parent.dims[x] ** 2 for x in self.members)

    @property
    def member_set(self) -> frozenset[int]:
        return frozenset(self.members)

    def __contains__(self, i: int) -> bool:
        return i in self.members

    def __len__(self):
        return len(self.members)

    def __le__(self, other: FusionSubring) -> bool:
        return self.member_set <= other.member_set

    def labels(self) -> list[str]:
        return [self.parent.basis[i] for i in self.members]

    def sort_key(self):
        return (self.dim, self.members)

    def as_ring(self) -> FusionRing:
        """The subring as a fusion ring in its own right, basis in member order."""
        pos = {x: k for k, x in enumerate(self.members)}
        P = self.parent
        products = {}
        for x in self.members:
            for y in self.members:
                products[(pos[x], pos[y])] = [(pos[e], m) for e, m in P.product(x, y).items()]
        return FusionRing(
            f"{P.name}[{','.join(self.labels())}]",
            [P.basis[x] for x in self.members],
            pos[P.unit],
            [pos[P.dual[x]] for x in self.members],
            [P.dims[x] for x in self.members],
            products,
        )

    def __repr__(self):
        return "{" + ", ".join(self.labels()) + "}"


def make_subring(ring: FusionRing, members: Iterable[int]) -> FusionSubring:
    """Wrap a member set, refusing sets that are not closed."""
    X = frozenset(ring.check_index(i) for i in members)
    if not is_closed(ring, X):
        raise ClosureViolation(f"{ring.labels(X)} is not closed under product and duality", witness=sorted(X))
    return FusionSubring(ring, tuple(X))


def generate_subring(ring: FusionRing, seed: Iterable[int] = ()) -> FusionSubring:
    """Least closed member set containing ``seed`` and the unit."""
    X = {ring.unit} | {ring.check_index(i) for i in seed}
    while True:
        new = {ring.dual[x] for x in X}
        for c in X:
            for d in X:
                new |= ring.support(c, d)
        if new <= X:
            return FusionSubring(ring, tuple(X))
        X |= new


@dataclass(frozen=True)
class IntegralElement:
    subring: FusionSubring
    normalized: RingElement
    regular: RingElement


@ring_memo
def integral(subring: FusionSubring) -> IntegralElement:
    """Idempotent integral of a subring and its unnormalized regular element.

    The normalized element has coefficient ``eps(x)/dim`` at every member x.
    Idempotency and two-sided absorption are verified on construction.
    """
    ring = subring.parent
    dim = subring.dim
    reg = [Fraction(0)] * ring.n
    for x in subring.members:
        reg[x] = Fraction(ring.dims[x])
    regular = RingElement(ring, tuple(reg))
    lam = regular.scale(Fraction(1, dim))
    if lam * lam != lam:
        raise IntegralPropertyFailure(f"integral of {subring} is not idempotent", witness=subring.members)
    for x in subring.members:
        b = ring.basis_element(x)
        eps_lam = lam.scale(ring.dims[x])
        if b * lam != eps_lam or lam * b != eps_lam:
            raise IntegralPropertyFailure(f"integral of {subring} does not absorb {ring.basis[x]}", witness=x)
    return IntegralElement(subring, lam, regular)


def intersect(a: FusionSubring, b: FusionSubring) -> FusionSubring:
    if a.parent != b.parent:
        raise RingMismatch("subrings of different rings")
    return make_subring(a.parent, a.member_set & b.member_set)


@dataclass(frozen=True)
class InvertibleGroup:
    """Grouplike basis elements, viewed as a finite group.

    ``elements[k]`` is the ring index of group element ``k``; element 0 is the
    unit. ``subgroups`` are the subgroups as fusion subrings.
    """

    subring: FusionSubring
    group: "FiniteGroup"
    elements: tuple[int, ...]
    subgroups: tuple[FusionSubring, ...]

    def to_ring(self, g: int) -> int:
        return self.elements[g]


@ring_memo
def invertible_group(ring: FusionRing) -> InvertibleGroup:
    from .groups.finite_group import FiniteGroup

    inv = [ring.unit] + [d for d in range(ring.n) if ring.dims[d] == 1 and d != ring.unit]
    pos = {x: k for k, x in enumerate(inv)}
    table = []
    for x in inv:
        row = []
        for y in inv:
            terms = ring.product(x, y)
            if len(terms) != 1 or next(iter(terms.values())) != 1 or next(iter(terms)) not in pos:
                raise InvertibleClosureFailure(
                    f"{ring.basis[x]}*{ring.basis[y]} is not a single invertible basis element", witness=(x, y))
            row.append(pos[next(iter(terms))])
        table.append(row)
    G = FiniteGroup(table, name=f"G({ring.name})", labels=[ring.basis[x] for x in inv])
    subs = tuple(sorted((FusionSubring(ring, tuple(inv[g] for g in S)) for S in G.subgroups()),
                        key=FusionSubring.sort_key))
    return InvertibleGroup(FusionSubring(ring, tuple(inv)), G, tuple(inv), subs)


def enumerate_subrings(ring: FusionRing, max_basis: int = DEFAULT.max_basis) -> list[FusionSubring]:
    """All fusion subrings, by closing every subset of the basis."""
    if ring.n > max_basis:
        raise BasisTooLarge(f"basis of size {ring.n} exceeds the enumeration bound {max_basis}")
    return list(_all_subrings(ring))


@ring_memo
def _all_subrings(ring: FusionRing) -> tuple[FusionSubring, ...]:
    found = {}
    others = [i for i in range(ring.n) if i != ring.unit]
    for r in range(len(others) + 1):
        for seed in combinations(others, r):
            S = generate_subring(ring, seed)
            found[S.members] = S
    return tuple(sorted(found.values(), key=FusionSubring.sort_key))


def subrings_of_invertibles(ring: FusionRing) -> list[FusionSubring]:
    """Subrings k[G] for G a subgroup of the grouplike elements."""
    return list(invertible_group(ring).subgroups)
