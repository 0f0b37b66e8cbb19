"""Exact arithmetic in the cyclotomic field Q(zeta_m).

Elements are coefficient vectors of length phi(m) in the power basis
1, z, ..., z^(phi(m)-1), i.e. polynomials reduced modulo the m-th cyclotomic
polynomial. This representation is canonical, so equality is tuple equality.
"""
from __future__ import annotations

import cmath
from fractions import Fraction
from functools import lru_cache
from math import lcm


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_m, lowest degree first."""
    num = [-1] + [0] * (m - 1) + [1]  # x^m - 1
    for d in range(1, m):
        if m % d == 0:
            num = _exact_div(num, list(cyclotomic_polynomial(d)))
    return tuple(num)


def _exact_div(num: list[int], den: list[int]) -> list[int]:
    num = num[:]
    q = [0] * (len(num) - len(den) + 1)
    for i in range(len(q) - 1, -1, -1):
        c = num[i + len(den) - 1]  # den is monic
        q[i] = c
        for j, d in enumerate(den):
            num[i + j] -= c * d
    assert not any(num), "non-exact polynomial division"
    return q


def _reduce(poly: list[Fraction], m: int) -> tuple[Fraction, ...]:
    phi = cyclotomic_polynomial(m)
    deg = len(phi) - 1
    p = list(poly)
    for i in range(len(p) - 1, deg - 1, -1):
        c = p[i]
        if c:
            for j in range(deg + 1):
                p[i - deg + j] -= c * phi[j]
    p = p[:deg] + [Fraction(0)] * (deg - len(p))
    return tuple(Fraction(x) for x in p[:deg])


@lru_cache(maxsize=None)
def _power(m: int, k: int) -> tuple[Fraction, ...]:
    k %= m
    return _reduce([Fraction(0)] * k + [Fraction(1)], m)


class Cyclotomic:
    __slots__ = ("m", "coeffs")

    def __init__(self, m: int, coeffs):
        self.m = m
        self.coeffs = tuple(coeffs)

    # -- constructors ----------------------------------------------------
    @classmethod
    def from_rational(cls, x, m: int = 1) -> Cyclotomic:
        deg = len(cyclotomic_polynomial(m)) - 1
        return cls(m, (Fraction(x),) + (Fraction(0),) * (deg - 1))

    @classmethod
    def zeta(cls, m: int, k: int = 1) -> Cyclotomic:
        return cls(m, _power(m, k))

    @classmethod
    def from_exponents(cls, m: int, counts: dict[int, int | Fraction]) -> Cyclotomic:
        """sum_k counts[k] * zeta_m^k."""
        acc = [Fraction(0)] * (len(cyclotomic_polynomial(m)) - 1)
        for k, c in counts.items():
            if c:
                for i, x in enumerate(_power(m, k)):
                    if x:
                        acc[i] += c * x
        return cls(m, acc)

    # -- field operations ------------------------------------------------
    def lift(self, M: int) -> Cyclotomic:
        if M == self.m:
            return self
        if M % self.m:
            raise ValueError(f"cannot lift conductor {self.m} to {M}")
        s = M // self.m
        return Cyclotomic.from_exponents(M, {i * s: c for i, c in enumerate(self.coeffs) if c})

    def _align(self, other):
        if isinstance(other, (int, Fraction)):
            return self, Cyclotomic.from_rational(other, self.m)
        if self.m == other.m:
            return self, other
        M = lcm(self.m, other.m)
        return self.lift(M), other.lift(M)

    def __add__(self, other):
        a, b = self._align(other)
        return Cyclotomic(a.m, [x + y for x, y in zip(a.coeffs, b.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self.m, [-x for x in self.coeffs])

    def __sub__(self, other):
        a, b = self._align(other)
        return Cyclotomic(a.m, [x - y for x, y in zip(a.coeffs, b.coeffs)])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Cyclotomic(self.m, [x * other for x in self.coeffs])
        a, b = self._align(other)
        prod = [Fraction(0)] * (2 * len(a.coeffs) - 1)
        for i, x in enumerate(a.coeffs):
            if x:
                for j, y in enumerate(b.coeffs):
                    if y:
                        prod[i + j] += x * y
        return Cyclotomic(a.m, _reduce(prod, a.m))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return Cyclotomic(self.m, [x / other for x in self.coeffs])
        raise TypeError("only division by rationals is supported")

    def conjugate(self) -> Cyclotomic:
        """Image under zeta -> zeta^-1 (complex conjugation)."""
        return Cyclotomic.from_exponents(self.m, {-i: c for i, c in enumerate(self.coeffs) if c})

    # -- inspection ------------------------------------------------------
    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return self.coeffs[0]

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __complex__(self):
        z = cmath.exp(2j * cmath.pi / self.m)
        return complex(sum(float(c) * z ** i for i, c in enumerate(self.coeffs)))

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coeffs[0] == other
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        a, b = self._align(other)
        return a.coeffs == b.coeffs

    def __hash__(self):
        # equal values may carry different conductors, so only the rational
        # case can be hashed by value
        return hash(self.coeffs[0]) if self.is_rational() else hash("irrational-cyclotomic")

    def __repr__(self):
        if self.is_rational():
            return str(self.coeffs[0])
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}" if i == 0 else f"{c}*z{self.m}^{i}")
        return " + ".join(terms)

