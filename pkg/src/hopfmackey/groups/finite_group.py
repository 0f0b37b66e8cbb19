"""Finite groups given by multiplication tables (identity = 0, desk scale)."""
from __future__ import annotations

from functools import cached_property
from itertools import product as iproduct
from typing import Iterable, Sequence

from ..config import DEFAULT
from ..errors import MalformedTable, NotASubgroup, OrderTooLarge

Subgroup = tuple[int, ...]


class FiniteGroup:
    def __init__(
        self,
        table: Sequence[Sequence[int]],
        name: str = "",
        labels: Sequence[str] | None = None,
        nonlinear_characters: Sequence[Sequence[int]] = (),
    ):
        n = len(table)
        if n == 0 or any(len(row) != n for row in table):
            raise MalformedTable("multiplication table must be square and nonempty")
        for row in table:
            for x in row:
                if not isinstance(x, int) or not 0 <= x < n:
                    raise MalformedTable(f"table entry {x!r} out of range")
        t = tuple(tuple(row) for row in table)
        if t[0] != tuple(range(n)) or any(t[g][0] != g for g in range(n)):
            raise MalformedTable("element 0 must be the identity")
        for g in range(n):
            if sorted(t[g]) != list(range(n)):
                raise MalformedTable(f"row {g} is not a permutation (no unique inverse)")
        for a, b, c in iproduct(range(n), repeat=3):
            if t[t[a][b]][c] != t[a][t[b][c]]:
                raise MalformedTable(f"table is not associative at ({a}, {b}, {c})")
        self.table = t
        self.name = name
        self.labels = tuple(labels) if labels is not None else tuple(str(g) for g in range(n))
        if len(self.labels) != n:
            raise MalformedTable("one label per element required")
        self._inv = tuple(t[g].index(0) for g in range(n))
        self.nonlinear_characters = tuple(tuple(v) for v in nonlinear_characters)

    # -- elementwise -----------------------------------------------------
    @property
    def order(self) -> int:
        return len(self.table)

    def __len__(self):
        return len(self.table)

    @property
    def elements(self) -> range:
        return range(len(self.table))

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def prod(self, *xs: int) -> int:
        r = 0
        for x in xs:
            r = self.table[r][x]
        return r

    def inv(self, a: int) -> int:
        return self._inv[a]

    def conj(self, x: int, g: int) -> int:
        """``x g x^-1``."""
        return self.table[self.table[x][g]][self._inv[x]]

    def element_order(self, g: int) -> int:
        k, x = 1, g
        while x != 0:
            x = self.table[x][g]
            k += 1
        return k

    @cached_property
    def exponent(self) -> int:
        from math import lcm
        e = 1
        for g in self.elements:
            e = lcm(e, self.element_order(g))
        return e

    def index(self, label: str | int) -> int:
        if isinstance(label, int):
            if not 0 <= label < self.order:
                raise NotASubgroup(f"{label} is not an element")
            return label
        try:
            return self.labels.index(label)
        except ValueError:
            raise NotASubgroup(f"no element labelled {label!r}") from None

    # -- subgroups -------------------------------------------------------
    @property
    def whole(self) -> Subgroup:
        return tuple(self.elements)

    @property
    def trivial(self) -> Subgroup:
        return (0,)

    def generated(self, gens: Iterable[int]) -> Subgroup:
        S = {0}
        frontier = [0]
        gens = list(gens)
        while frontier:
            nxt = []
            for h in frontier:
                for g in gens:
                    x = self.table[h][g]
                    if x not in S:
                        S.add(x)
                        nxt.append(x)
            frontier = nxt
        return tuple(sorted(S))

    def is_subgroup(self, S: Iterable[int]) -> bool:
        S = set(S)
        if 0 not in S:
            return False
        return all(self.table[a][self._inv[b]] in S for a in S for b in S)

    def check_subgroup(self, S: Iterable[int]) -> Subgroup:
        S = tuple(sorted(set(S)))
        if not self.is_subgroup(S):
            raise NotASubgroup(f"{[self.labels[x] for x in S]} is not a subgroup of {self.name}")
        return S

    def subgroups(self, max_order: int = DEFAULT.max_group_order) -> list[Subgroup]:
        """All subgroups, sorted by (order, elements), via joins of cyclic subgroups."""
        return list(self._subgroups(max_order))

    def _subgroups(self, max_order):
        if self.order > max_order:
            raise OrderTooLarge(f"|G| = {self.order} exceeds {max_order}")
        return self._subgroup_list

    @cached_property
    def _subgroup_list(self) -> tuple[Subgroup, ...]:
        cyclic = {self.generated([g]) for g in self.elements}
        found = set(cyclic)
        frontier = set(cyclic)
        while frontier:
            new = set()
            for A in frontier:
                for C in cyclic:
                    if set(C) <= set(A):
                        continue
                    J = self.generated(A + C)
                    if J not in found:
                        new.add(J)
            found |= new
            frontier = new
        return tuple(sorted(found, key=lambda s: (len(s), s)))

    def conjugate_subgroup(self, x: int, S: Subgroup) -> Subgroup:
        """``x S x^-1``."""
        return tuple(sorted({self.conj(x, s) for s in S}))

    def is_normal(self, S: Subgroup) -> bool:
        return all(self.conjugate_subgroup(g, S) == tuple(S) for g in self.elements)

    def is_abelian(self, S: Subgroup | None = None) -> bool:
        S = self.whole if S is None else S
        return all(self.table[a][b] == self.table[b][a] for a in S for b in S)

    def intersection(self, A: Subgroup, B: Subgroup) -> Subgroup:
        return tuple(sorted(set(A) & set(B)))

    def left_cosets(self, S: Subgroup) -> list[Subgroup]:
        """Cosets ``g S`` ordered by least element (the representative)."""
        seen, out = set(), []
        for g in self.elements:
            if g in seen:
                continue
            C = tuple(sorted({self.table[g][s] for s in S}))
            seen.update(C)
            out.append(C)
        return out

    def double_cosets(self, L: Subgroup, K: Subgroup) -> list[Subgroup]:
        """Double cosets ``L x K`` ordered by least element (the representative)."""
        seen, out = set(), []
        for g in self.elements:
            if g in seen:
                continue
            C = tuple(sorted({self.table[self.table[l][g]][k] for l in L for k in K}))
            seen.update(C)
            out.append(C)
        return out

    def conjugacy_classes(self, S: Subgroup | None = None) -> list[Subgroup]:
        """Classes of S under conjugation by S."""
        S = self.whole if S is None else tuple(S)
        seen, out = set(), []
        for g in S:
            if g in seen:
                continue
            C = tuple(sorted({self.conj(x, g) for x in S}))
            seen.update(C)
            out.append(C)
        return out

    def minimal_generators(self, S: Subgroup | None = None) -> list[int]:
        S = self.whole if S is None else tuple(S)
        gens: list[int] = []
        span = self.generated(gens)
        # Greedy by decreasing element order keeps generating sets short.
        for g in sorted(S, key=lambda x: (-self.element_order(x), x)):
            if g not in span:
                gens.append(g)
                span = self.generated(gens)
            if len(span) == len(S):
                break
        return gens

    def subgroup_as_group(self, S: Subgroup) -> FiniteGroup:
        """Re-index a subgroup as a standalone group (element k = S[k])."""
        S = self.check_subgroup(S)
        pos = {x: k for k, x in enumerate(S)}
        return FiniteGroup([[pos[self.table[a][b]] for b in S] for a in S],
                           name=f"{self.name}<{len(S)}>", labels=[self.labels[x] for x in S])

    def __eq__(self, other):
        return isinstance(other, FiniteGroup) and self.table == other.table

    def __hash__(self):
        return hash(self.table)

    def __repr__(self):
        return f"FiniteGroup({self.name!r}, order={self.order})"


def cyclic_group(n: int) -> FiniteGroup:
    return FiniteGroup([[(a + b) % n for b in range(n)] for a in range(n)], name=f"Z{n}",
                       labels=[str(k) for k in range(n)])


def is_isomorphic(G: FiniteGroup, H: FiniteGroup) -> bool:
    """Brute-force isomorphism test by extending generator images."""
    if G.order != H.order:
        return False
    if sorted(G.element_order(g) for g in G.elements) != sorted(H.element_order(h) for h in H.elements):
        return False
    gens = G.minimal_generators()
    words = _words(G, gens)
    cands = [[h for h in H.elements if H.element_order(h) == G.element_order(g)] for g in gens]
    for images in iproduct(*cands):
        phi = {}
        ok = True
        for g, word in words.items():
            phi[g] = H.prod(*(images[i] for i in word))
        if len(set(phi.values())) != G.order:
            continue
        for a in G.elements:
            for b in G.elements:
                if phi[G.mul(a, b)] != H.mul(phi[a], phi[b]):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            return True
    return False


def _words(G: FiniteGroup, gens: list[int]) -> dict[int, tuple[int, ...]]:
    words = {0: ()}
    frontier = [0]
    while frontier:
        nxt = []
        for h in frontier:
            for i, g in enumerate(gens):
                x = G.mul(h, g)
                if x not in words:
                    words[x] = words[h] + (i,)
                    nxt.append(x)
        frontier = nxt
    return words


# function forms of the lattice operations
def subgroups(G: FiniteGroup) -> list[Subgroup]:
    return G.subgroups()


def cosets(G: FiniteGroup, M: Iterable[int]) -> list[Subgroup]:
    """Left cosets gM."""
    return G.left_cosets(G.check_subgroup(M))


def double_cosets_group(G: FiniteGroup, M: Iterable[int], N: Iterable[int]) -> list[Subgroup]:
    """Double cosets M x N, least element first."""
    return G.double_cosets(G.check_subgroup(M), G.check_subgroup(N))


def conjugate_subgroup(G: FiniteGroup, x: int, M: Iterable[int]) -> Subgroup:
    """x M x^-1."""
    return G.conjugate_subgroup(x, G.check_subgroup(M))
