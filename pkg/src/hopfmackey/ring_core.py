"""Fusion rings with nonnegative integer structure constants.

A :class:`FusionRing` models the character ring of the dual of a semisimple
Hopf algebra: a distinguished basis of irreducible characters, products
``c*d = sum_e N[c][d][e] e``, a unit, the duality involution ``*`` and the
integer dimension function ``eps``.
"""
from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

import numpy as np

from .config import DEFAULT
from .errors import IndexOutOfRange, MalformedTable, NoConvergence, RingMismatch, AxiomViolation
from .exact import RationalSubspace, eigenspace_exact
from .report import Check, Report

__all__ = [
    "FusionRing",
    "RingElement",
    "validate_ring",
    "multiply",
    "left_mult_matrix",
    "right_mult_matrix",
    "element_matrix",
    "fp_eigenvalue",
    "power_iteration",
    "eigenspace_exact",
    "RationalSubspace",
]

Terms = Mapping[int, int]


class FusionRing:
    """Based ring given by a complete product table.

    ``products`` maps every ordered pair ``(c, d)`` of basis indices to an
    iterable of ``(e, multiplicity)`` pairs with multiplicities >= 1. Only the
    syntax of the table is checked here; the ring axioms are checked by
    :func:`validate_ring`.
    """

    def __init__(
        self,
        name: str,
        basis: Sequence[str],
        unit: int,
        dual: Sequence[int],
        dims: Sequence[int],
        products: Mapping[tuple[int, int], Iterable[tuple[int, int]]],
    ):
        n = len(basis)
        if n == 0:
            raise MalformedTable("empty basis")
        if len(set(basis)) != n:
            raise MalformedTable("basis labels must be distinct")
        if len(dual) != n or len(dims) != n:
            raise MalformedTable("dual and dims must have one entry per basis element")
        if not 0 <= unit < n:
            raise MalformedTable(f"unit index {unit} out of range")
        for i, x in enumerate(dual):
            if not isinstance(x, int) or not 0 <= x < n:
                raise MalformedTable(f"dual[{i}] = {x!r} is not a basis index")
        for i, x in enumerate(dims):
            if not isinstance(x, int) or isinstance(x, bool) or x < 1:
                raise MalformedTable(f"dims[{i}] = {x!r} is not a positive integer")
        table: list[list[dict[int, int]]] = [[{} for _ in range(n)] for _ in range(n)]
        seen = set()
        for key, terms in products.items():
            c, d = key
            if not (0 <= c < n and 0 <= d < n):
                raise MalformedTable(f"product entry ({c}, {d}) out of range")
            seen.add((c, d))
            for e, m in terms:
                if not 0 <= e < n:
                    raise MalformedTable(f"term index {e} in product ({c}, {d}) out of range")
                if not isinstance(m, int) or m < 1:
                    raise MalformedTable(f"multiplicity {m!r} in product ({c}, {d}) must be >= 1")
                if e in table[c][d]:
                    raise MalformedTable(f"repeated term {e} in product ({c}, {d})")
                table[c][d][e] = m
        for c in range(n):
            for d in range(n):
                if (c, d) not in seen:
                    raise MalformedTable(
                        f"missing product entry ({basis[c]}, {basis[d]})", )
        self.name = name
        self.basis = tuple(basis)
        self.unit = unit
        self.dual = tuple(dual)
        self.dims = tuple(dims)
        self._table = tuple(tuple(dict(sorted(t.items())) for t in row) for row in table)
        self._index = {lab: i for i, lab in enumerate(self.basis)}
        self._memo: dict = {}

    # -- structure -------------------------------------------------------
    @property
    def n(self) -> int:
        return len(self.basis)

    def __len__(self) -> int:
        return len(self.basis)

    def product(self, c: int, d: int) -> Mapping[int, int]:
        return self._table[c][d]

    def N(self, c: int, d: int, e: int) -> int:
        return self._table[c][d].get(e, 0)

    def support(self, c: int, d: int) -> frozenset[int]:
        return frozenset(self._table[c][d])

    @property
    def total_dimension(self) -> int:
        return sum(x * x for x in self.dims)

    def is_commutative(self) -> bool:
        return all(self._table[c][d] == self._table[d][c] for c in range(self.n) for d in range(c))

    def check_index(self, i: int) -> int:
        if not isinstance(i, int) or not 0 <= i < self.n:
            raise IndexOutOfRange(f"{i!r} is not a basis index of {self.name}")
        return i

    def index(self, label: str | int) -> int:
        if isinstance(label, int):
            return self.check_index(label)
        try:
            return self._index[label]
        except KeyError:
            raise IndexOutOfRange(f"no basis element labelled {label!r} in {self.name}") from None

    def indices(self, labels: Iterable[str | int]) -> frozenset[int]:
        return frozenset(self.index(x) for x in labels)

    def labels(self, idx: Iterable[int]) -> list[str]:
        return [self.basis[i] for i in sorted(idx)]

    # -- elements --------------------------------------------------------
    def zero(self) -> RingElement:
        return RingElement(self, (Fraction(0),) * self.n)

    def basis_element(self, i: int) -> RingElement:
        self.check_index(i)
        v = [Fraction(0)] * self.n
        v[i] = Fraction(1)
        return RingElement(self, tuple(v))

    def one(self) -> RingElement:
        return self.basis_element(self.unit)

    def element(self, coeffs: Mapping[int | str, Fraction | int] | Sequence[Fraction | int]) -> RingElement:
        v = [Fraction(0)] * self.n
        if isinstance(coeffs, Mapping):
            for k, x in coeffs.items():
                v[self.index(k)] += Fraction(x)
        else:
            if len(coeffs) != self.n:
                raise RingMismatch("coefficient vector has the wrong length")
            v = [Fraction(x) for x in coeffs]
        return RingElement(self, tuple(v))

    def _key(self):
        return (self.basis, self.unit, self.dual, self.dims, self._table)

    def __eq__(self, other):
        if not isinstance(other, FusionRing):
            return NotImplemented
        return self is other or self._key() == other._key()

    def __hash__(self):
        return hash((self.basis, self.unit, self.dims))

    def __repr__(self):
        return f"FusionRing({self.name!r}, basis={list(self.basis)})"


@dataclass(frozen=True, eq=False)
class RingElement:
    ring: FusionRing
    coeffs: tuple[Fraction, ...]

    def _same(self, other: RingElement) -> None:
        if not isinstance(other, RingElement) or other.ring != self.ring:
            raise RingMismatch("elements belong to different rings")

    def __add__(self, other):
        self._same(other)
        return RingElement(self.ring, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        self._same(other)
        return RingElement(self.ring, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        return RingElement(self.ring, tuple(-a for a in self.coeffs))

    def scale(self, s: Fraction | int) -> RingElement:
        s = Fraction(s)
        return RingElement(self.ring, tuple(s * a for a in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return multiply(self.ring, self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, RingElement):
            return NotImplemented
        return self.ring == other.ring and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __getitem__(self, i: int) -> Fraction:
        return self.coeffs[i]

    @property
    def support(self) -> frozenset[int]:
        return frozenset(i for i, a in enumerate(self.coeffs) if a)

    def epsilon(self) -> Fraction:
        return sum((a * d for a, d in zip(self.coeffs, self.ring.dims)), Fraction(0))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __repr__(self):
        if self.is_zero():
            return "0"
        parts = []
        for i, a in enumerate(self.coeffs):
            if a:
                lab = self.ring.basis[i]
                parts.append(lab if a == 1 else f"{a}*{lab}")
        return " + ".join(parts)


def ring_memo(fn):
    """Cache a pure function of a ring (or subring) and further hashable arguments.

    The cache lives on the ring instance, so it is dropped with the ring.
    Subring arguments must belong to that ring; otherwise the call is not cached
    and the wrapped function reports the mismatch itself.
    """
    @functools.wraps(fn)
    def wrapper(first, *args, **kwargs):
        ring = getattr(first, "parent", first)
        for a in (first, *args):
            parent = getattr(a, "parent", None)
            if parent is not None and parent is not ring and parent != ring:
                return fn(first, *args, **kwargs)
        key = (fn.__qualname__, first if first is not ring else None, args, tuple(sorted(kwargs.items())))
        try:
            return ring._memo[key]
        except KeyError:
            pass
        out = ring._memo[key] = fn(first, *args, **kwargs)
        return out

    return wrapper


def multiply(ring: FusionRing, a: RingElement, b: RingElement) -> RingElement:
    """Bilinear extension of the structure constants."""
    if a.ring != ring or b.ring != ring:
        raise RingMismatch("operands are not elements of this ring")
    out = [Fraction(0)] * ring.n
    for i, x in enumerate(a.coeffs):
        if not x:
            continue
        for j, y in enumerate(b.coeffs):
            if not y:
                continue
            xy = x * y
            for e, m in ring.product(i, j).items():
                out[e] += xy * m
    return RingElement(ring, tuple(out))


def left_mult_matrix(ring: FusionRing, d: int) -> list[list[int]]:
    """Matrix of ``x -> d*x``; column ``c`` holds the coefficients of ``d*c``."""
    ring.check_index(d)
    n = ring.n
    return [[ring.N(d, c, e) for c in range(n)] for e in range(n)]


def right_mult_matrix(ring: FusionRing, d: int) -> list[list[int]]:
    """Matrix of ``x -> x*d``; column ``c`` holds the coefficients of ``c*d``."""
    ring.check_index(d)
    n = ring.n
    return [[ring.N(c, d, e) for c in range(n)] for e in range(n)]


def element_matrix(ring: FusionRing, a: RingElement, side: str = "left") -> list[list[Fraction]]:
    """Multiplication matrix of an arbitrary element (``side`` = left/right)."""
    if a.ring != ring:
        raise RingMismatch("element is not in this ring")
    n = ring.n
    cols = []
    for c in range(n):
        b = ring.basis_element(c)
        cols.append((a * b if side == "left" else b * a).coeffs)
    return [[cols[c][e] for c in range(n)] for e in range(n)]


def power_iteration(matrix, tol: float = DEFAULT.tol, max_iter: int = DEFAULT.max_iter) -> float:
    """Dominant eigenvalue of a nonnegative matrix, started from the all-ones vector.

    Iterates with ``A + I``: same eigenvectors, and the Perron root becomes
    strictly dominant even when ``A`` is periodic (e.g. has ``-rho`` as an
    eigenvalue), where plain iteration from a positive vector can stall on a
    Rayleigh quotient that is not an eigenvalue. The returned value is the
    Rayleigh quotient of ``A`` itself; iteration stops when two successive
    quotients differ by less than ``tol``.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    A = np.asarray(matrix, dtype=float)
    x = np.ones(A.shape[0])
    prev = None
    for _ in range(max_iter):
        y = A @ x
        rq = float(x @ y) / float(x @ x)
        if prev is not None and abs(rq - prev) < tol:
            return rq
        prev = rq
        x = y + x
        x /= np.linalg.norm(x)
    raise NoConvergence(f"power iteration did not converge in {max_iter} steps", witness=prev)


def fp_eigenvalue(ring: FusionRing, d: int, tol: float = DEFAULT.tol, max_iter: int = DEFAULT.max_iter) -> float:
    """Frobenius-Perron eigenvalue of left multiplication by ``d``."""
    return power_iteration(left_mult_matrix(ring, d), tol, max_iter)


def validate_ring(ring: FusionRing) -> Report:
    """Check the based-ring axioms, recording the first witness per failed axiom."""
    n, u = ring.n, ring.unit
    rep = Report()

    w = None
    for c in range(n):
        if ring.dual[ring.dual[c]] != c or ring.dims[ring.dual[c]] != ring.dims[c]:
            w = (c,)
            break
    if w is None and ring.dual[u] != u:
        w = (u,)
    rep.add(Check("dual_involution", w is None, w))

    w = None
    for d in range(n):
        if dict(ring.product(u, d)) != {d: 1}:
            w = (u, d)
            break
        if dict(ring.product(d, u)) != {d: 1}:
            w = (d, u)
            break
    rep.add(Check("unit_law", w is None, w))

    w = None
    for c in range(n):
        for d in range(n):
            want = 1 if d == ring.dual[c] else 0
            if ring.N(c, d, u) != want:
                w = (c, d)
                break
        if w:
            break
    rep.add(Check("duality_law", w is None, w))

    w = None
    for c in range(n):
        for d in range(n):
            cd = ring.product(c, d)
            for g in range(n):
                left: dict[int, int] = {}
                for e, m in cd.items():
                    for f, k in ring.product(e, g).items():
                        left[f] = left.get(f, 0) + m * k
                right: dict[int, int] = {}
                for e, m in ring.product(d, g).items():
                    for f, k in ring.product(c, e).items():
                        right[f] = right.get(f, 0) + m * k
                if left != right:
                    f = min(x for x in set(left) | set(right) if left.get(x, 0) != right.get(x, 0))
                    w = (c, d, g, f)
                    break
            if w:
                break
        if w:
            break
    rep.add(Check("associativity", w is None, w))

    w = None
    for c in range(n):
        for d in range(n):
            if ring.dims[c] * ring.dims[d] != sum(m * ring.dims[e] for e, m in ring.product(c, d).items()):
                w = (c, d)
                break
        if w:
            break
    rep.add(Check("dimension_homomorphism", w is None, w))
    return rep


def require_valid(ring: FusionRing) -> FusionRing:
    rep = validate_ring(ring)
    if not rep.passed:
        bad = rep.failures()[0]
        raise AxiomViolation(f"{ring.name}: {bad.name} fails at {bad.witness}", witness=bad)
    return ring
