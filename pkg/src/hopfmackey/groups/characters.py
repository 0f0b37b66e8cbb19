"""Class functions with exact cyclotomic values; induction, restriction, conjugation.

A class function lives on a subgroup ``support`` of an ambient
:class:`FiniteGroup` and stores one value per element of the support (values
are checked to be constant on conjugacy classes of the support). All values in
one ambient group share the conductor ``G.exponent``.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import product as iproduct
from typing import Sequence

from ..errors import NotASubgroup, UnsupportedSubgroup, VerificationError
from .cyclotomic import Cyclotomic
from .finite_group import FiniteGroup, Subgroup


class ClassFunction:
    __slots__ = ("group", "support", "values", "_pos")

    def __init__(self, group: FiniteGroup, support: Subgroup, values: Sequence[Cyclotomic], check: bool = True):
        self.group = group
        self.support = tuple(support)
        self.values = tuple(values)
        if len(self.values) != len(self.support):
            raise ValueError("one value per support element required")
        self._pos = {g: k for k, g in enumerate(self.support)}
        if check:
            for C in group.conjugacy_classes(self.support):
                v0 = self(C[0])
                if any(self(g) != v0 for g in C[1:]):
                    raise VerificationError("values are not constant on a conjugacy class", witness=C)

    @classmethod
    def constant(cls, group: FiniteGroup, support: Subgroup, value=1) -> ClassFunction:
        v = Cyclotomic.from_rational(value, group.exponent)
        return cls(group, support, [v] * len(support), check=False)

    @classmethod
    def from_integers(cls, group: FiniteGroup, support: Subgroup, values: Sequence[int]) -> ClassFunction:
        m = group.exponent
        return cls(group, support, [Cyclotomic.from_rational(v, m) for v in values])

    def __call__(self, g: int) -> Cyclotomic:
        return self.values[self._pos[g]]

    @property
    def degree(self) -> Cyclotomic:
        return self(0)

    def _same(self, other: ClassFunction):
        if self.group != other.group or self.support != other.support:
            raise ValueError("class functions on different subgroups")

    def __add__(self, other: ClassFunction) -> ClassFunction:
        if isinstance(other, int) and other == 0:
            return self
        self._same(other)
        return ClassFunction(self.group, self.support, [a + b for a, b in zip(self.values, other.values)], check=False)

    __radd__ = __add__

    def __sub__(self, other: ClassFunction) -> ClassFunction:
        self._same(other)
        return ClassFunction(self.group, self.support, [a - b for a, b in zip(self.values, other.values)], check=False)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return ClassFunction(self.group, self.support, [a * other for a in self.values], check=False)
        self._same(other)
        return ClassFunction(self.group, self.support, [a * b for a, b in zip(self.values, other.values)], check=False)

    __rmul__ = __mul__

    def conj(self) -> ClassFunction:
        return ClassFunction(self.group, self.support, [a.conjugate() for a in self.values], check=False)

    def __eq__(self, other):
        if not isinstance(other, ClassFunction):
            return NotImplemented
        return self.group == other.group and self.support == other.support and self.values == other.values

    def __hash__(self):
        return hash(self.support)

    def class_values(self) -> list[Cyclotomic]:
        return [self(C[0]) for C in self.group.conjugacy_classes(self.support)]

    def __repr__(self):
        return f"ClassFunction({self.class_values()})"


def inner(phi: ClassFunction, psi: ClassFunction) -> Fraction:
    """<phi, psi> = (1/|S|) sum_g phi(g) conj(psi(g)); must be rational."""
    phi._same(psi)
    tot = Cyclotomic.from_rational(0, phi.group.exponent)
    for a, b in zip(phi.values, psi.values):
        tot = tot + a * b.conjugate()
    return (tot / len(phi.support)).to_fraction()


def restrict(chi: ClassFunction, S: Subgroup) -> ClassFunction:
    S = tuple(S)
    if not set(S) <= set(chi.support) or not chi.group.is_subgroup(S):
        raise NotASubgroup(f"{S} is not a subgroup of the support")
    return ClassFunction(chi.group, S, [chi(g) for g in S], check=False)


def induce(chi: ClassFunction, L: Subgroup | None = None) -> ClassFunction:
    """Induce from ``chi.support`` up to ``L`` (default: the whole group).

    ind(g) = (1/|M|) sum_{y in L, y^-1 g y in M} chi(y^-1 g y)
    """
    G = chi.group
    L = G.whole if L is None else tuple(L)
    M = chi.support
    Mset = set(M)
    if not Mset <= set(L) or not G.is_subgroup(L):
        raise NotASubgroup("induction target must be a subgroup containing the support")
    values: dict[int, Cyclotomic] = {}
    for C in G.conjugacy_classes(L):
        g = C[0]
        tot = Cyclotomic.from_rational(0, G.exponent)
        for y in L:
            h = G.conj(G.inv(y), g)
            if h in Mset:
                tot = tot + chi(h)
        v = tot / len(M)
        for x in C:
            values[x] = v
    return ClassFunction(G, L, [values[g] for g in L], check=False)


def conjugate_char(chi: ClassFunction, x: int) -> ClassFunction:
    """Character of x M x^-1 given by (x m x^-1) -> chi(m)."""
    G = chi.group
    S = G.conjugate_subgroup(x, chi.support)
    xi = G.inv(x)
    return ClassFunction(G, S, [chi(G.conj(xi, s)) for s in S], check=False)


def is_irreducible(chi: ClassFunction) -> bool:
    return inner(chi, chi) == 1


def linear_characters(G: FiniteGroup, S: Subgroup | None = None) -> list[ClassFunction]:
    """All homomorphisms S -> mu_e, e = exponent of G.

    Generator images range over all powers of zeta_e; each candidate is
    extended along the Cayley graph and kept only if it respects the full
    multiplication table of S.
    """
    S = G.whole if S is None else G.check_subgroup(S)
    e = G.exponent
    gens = G.minimal_generators(S)
    found = []
    for images in iproduct(range(e), repeat=len(gens)):
        phi = {0: 0}
        frontier = [0]
        ok = True
        while frontier and ok:
            nxt = []
            for h in frontier:
                for g, k in zip(gens, images):
                    x = G.mul(h, g)
                    want = (phi[h] + k) % e
                    if x in phi:
                        if phi[x] != want:
                            ok = False
                            break
                    else:
                        phi[x] = want
                        nxt.append(x)
                if not ok:
                    break
            frontier = nxt
        if not ok or len(phi) != len(S):
            continue
        if any((phi[a] + phi[b]) % e != phi[G.mul(a, b)] for a in S for b in S):
            continue
        found.append(ClassFunction(G, S, [Cyclotomic.zeta(e, phi[g]) for g in S], check=False))
    return found


class CharacterTable:
    """Irreducible characters of a subgroup, verified by orthogonality on construction."""

    def __init__(self, group: FiniteGroup, support: Subgroup, irreducibles: Sequence[ClassFunction]):
        self.group = group
        self.support = tuple(support)
        self.irreducibles = tuple(irreducibles)
        for i, a in enumerate(self.irreducibles):
            for j, b in enumerate(self.irreducibles):
                if inner(a, b) != (1 if i == j else 0):
                    raise VerificationError("character table fails row orthogonality", witness=(i, j))
        if sum(chi.degree.to_fraction() ** 2 for chi in self.irreducibles) != len(self.support):
            raise VerificationError("sum of squared degrees differs from the group order")
        if self.irreducibles and self.irreducibles[0] != ClassFunction.constant(group, self.support):
            raise VerificationError("first irreducible must be the trivial character")

    def __len__(self):
        return len(self.irreducibles)

    def __iter__(self):
        return iter(self.irreducibles)

    def __getitem__(self, i):
        return self.irreducibles[i]

    def decompose(self, chi: ClassFunction) -> list[int]:
        """Multiplicities of the irreducibles in ``chi``; must be integral."""
        out = []
        for psi in self.irreducibles:
            m = inner(chi, psi)
            if m.denominator != 1:
                raise VerificationError("non-integral multiplicity", witness=m)
            out.append(int(m))
        return out


def character_table(G: FiniteGroup, S: Subgroup | None = None) -> CharacterTable:
    """Character table of S <= G.

    Abelian subgroups are handled by enumerating linear characters; S = G may
    additionally use the nonlinear characters shipped with the group data.
    """
    S = G.whole if S is None else G.check_subgroup(S)
    irr = linear_characters(G, S)
    if len(irr) != len(S):
        if tuple(S) != G.whole or not G.nonlinear_characters:
            raise UnsupportedSubgroup(f"no character table available for the subgroup of order {len(S)}")
        irr += [ClassFunction.from_integers(G, S, vals) for vals in G.nonlinear_characters]
    return CharacterTable(G, S, irr)
