"""Exact arithmetic in cyclotomic fields Q(zeta_N).

Elements are stored in the power basis of Q[x] / Phi_N(x), where Phi_N is
the N-th cyclotomic polynomial and x stands for the root of unity
zeta_N = exp(2*pi*i/N).  That embedding is fixed once and for all; every
floating-point value produced by this package refers to it.

All values are immutable and safe to share between threads.
"""

from __future__ import annotations

import cmath
import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm

import mpmath


def _poly_div_exact(num: list[int], den: list[int]) -> list[int]:
    # Exact division of integer polynomials, monic divisor.  Coefficient
    # lists are low degree first.
    num = list(num)
    assert den[-1] == 1
    q = [0] * (len(num) - len(den) + 1)
    for k in range(len(q) - 1, -1, -1):
        c = num[k + len(den) - 1]
        q[k] = c
        if c:
            for i, d in enumerate(den):
                num[k + i] -= c * d
    assert all(c == 0 for c in num[: len(den) - 1])
    return q


def _divisors(n: int) -> list[int]:
    out = [d for d in range(1, n + 1) if n % d == 0]
    return out


def _trim(p: list[Fraction]) -> list[Fraction]:
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_sub(p: list[Fraction], q: list[Fraction]) -> list[Fraction]:
    out = list(p) + [Fraction(0)] * max(0, len(q) - len(p))
    for i, c in enumerate(q):
        out[i] -= c
    return out


def _poly_mul(p: list[Fraction], q: list[Fraction]) -> list[Fraction]:
    if not p or not q:
        return []
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                if b:
                    out[i + j] += a * b
    return out


def _poly_divmod(num, den) -> tuple[list[Fraction], list[Fraction]]:
    # polynomial division over Q, coefficient lists low degree first
    num = _trim(list(num))
    den = _trim(list(den))
    if not den:
        raise ZeroDivisionError
    q = [Fraction(0)] * max(0, len(num) - len(den) + 1)
    while len(num) >= len(den):
        c = num[-1] / den[-1]
        shift = len(num) - len(den)
        q[shift] += c
        for i, d in enumerate(den):
            num[i + shift] -= c * d
        num = _trim(num)
    return q, num


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_n, low degree first.

    >>> cyclotomic_polynomial(1)
    (-1, 1)
    >>> cyclotomic_polynomial(12)
    (1, 0, -1, 0, 1)
    """
    if n < 1:
        raise ValueError("conductor must be positive")
    poly = [-1] + [0] * (n - 1) + [1]  # x^n - 1
    for d in _divisors(n)[:-1]:
        poly = _poly_div_exact(poly, list(cyclotomic_polynomial(d)))
    return tuple(poly)


@lru_cache(maxsize=None)
def _power_basis_rows(n: int) -> tuple[tuple[int, ...], ...]:
    # Row j is the coordinate vector of x^j mod Phi_n in the power basis,
    # for j in range(n).  Integer entries since Phi_n is monic.
    phi = cyclotomic_polynomial(n)
    deg = len(phi) - 1
    rows = []
    cur = [0] * deg
    cur[0] = 1
    for _ in range(n):
        rows.append(tuple(cur))
        carry = cur[-1]
        cur = [0] + cur[:-1]
        if carry:
            for i in range(deg):
                cur[i] -= carry * phi[i]
    return tuple(rows)


def euler_phi(n: int) -> int:
    return len(cyclotomic_polynomial(n)) - 1


@dataclass(frozen=True)
class RootOfUnity:
    """The root of unity exp(2*pi*i * numerator/denominator), reduced.

    >>> RootOfUnity(3, 6)
    RootOfUnity(1, 2)
    >>> RootOfUnity(5, 4).order
    4
    """

    numerator: int
    denominator: int

    def __post_init__(self):
        if self.denominator <= 0:
            raise ValueError("denominator must be positive")
        num = self.numerator % self.denominator
        g = gcd(num, self.denominator)
        object.__setattr__(self, "numerator", num // g)
        object.__setattr__(self, "denominator", self.denominator // g)

    @classmethod
    def one(cls) -> "RootOfUnity":
        return cls(0, 1)

    @classmethod
    def parse(cls, text: str) -> "RootOfUnity":
        parts = text.strip().split("/")
        if len(parts) != 2:
            raise ValueError(f"expected 'num/den', got {text!r}")
        return cls(int(parts[0]), int(parts[1]))

    @property
    def order(self) -> int:
        return self.denominator

    @property
    def is_one(self) -> bool:
        return self.numerator == 0

    def inverse(self) -> "RootOfUnity":
        return RootOfUnity(-self.numerator, self.denominator)

    conjugate = inverse

    def __mul__(self, other: "RootOfUnity") -> "RootOfUnity":
        den = lcm(self.denominator, other.denominator)
        num = self.numerator * (den // self.denominator) + other.numerator * (
            den // other.denominator
        )
        return RootOfUnity(num, den)

    def __pow__(self, k: int) -> "RootOfUnity":
        return RootOfUnity(self.numerator * k, self.denominator)

    def turns(self) -> Fraction:
        return Fraction(self.numerator, self.denominator)

    def to_cyclotomic(self, conductor: int | None = None) -> "CyclotomicNumber":
        n = self.denominator if conductor is None else conductor
        if n % self.denominator:
            raise ValueError("conductor not divisible by the order")
        return CyclotomicNumber.root(n, self.numerator * (n // self.denominator))

    def to_complex(self) -> complex:
        return cmath.exp(2j * cmath.pi * self.numerator / self.denominator)

    def __str__(self) -> str:
        return f"{self.numerator}/{self.denominator}"


@dataclass(frozen=True)
class UnitComplexFloat:
    """A point of the unit circle in double precision (floating mode)."""

    re: float
    im: float

    def __post_init__(self):
        if abs(self.re * self.re + self.im * self.im - 1.0) > 1e-12:
            raise ValueError("not on the unit circle")

    @classmethod
    def from_turns(cls, t: float | Fraction) -> "UnitComplexFloat":
        z = cmath.exp(2j * cmath.pi * float(t))
        return cls(z.real, z.imag)

    @property
    def is_one(self) -> bool:
        return abs(complex(self.re, self.im) - 1.0) < 1e-12

    def inverse(self) -> "UnitComplexFloat":
        return UnitComplexFloat(self.re, -self.im)

    conjugate = inverse

    def to_complex(self) -> complex:
        return complex(self.re, self.im)


class CyclotomicNumber:
    """An element of Q(zeta_N), exact.

    >>> i = CyclotomicNumber.root(4, 1)
    >>> i * i == CyclotomicNumber.from_rational(-1, 4)
    True
    >>> (CyclotomicNumber.root(3, 1) + CyclotomicNumber.root(3, 2)
    ...  + CyclotomicNumber.one(3)).is_zero
    True
    """

    __slots__ = ("conductor", "coeffs")

    def __init__(self, conductor: int, coeffs):
        deg = euler_phi(conductor)
        coeffs = tuple(Fraction(c) for c in coeffs)
        if len(coeffs) != deg:
            raise ValueError(f"need {deg} coefficients for conductor {conductor}")
        self.conductor = conductor
        self.coeffs = coeffs

    # -- constructors ------------------------------------------------

    @classmethod
    def zero(cls, conductor: int = 1) -> "CyclotomicNumber":
        return cls(conductor, [0] * euler_phi(conductor))

    @classmethod
    def one(cls, conductor: int = 1) -> "CyclotomicNumber":
        return cls.from_rational(1, conductor)

    @classmethod
    def from_rational(cls, q, conductor: int = 1) -> "CyclotomicNumber":
        coeffs = [Fraction(0)] * euler_phi(conductor)
        coeffs[0] = Fraction(q)
        return cls(conductor, coeffs)

    @classmethod
    def root(cls, conductor: int, k: int) -> "CyclotomicNumber":
        # zeta_N^k in Q(zeta_N)
        row = _power_basis_rows(conductor)[k % conductor]
        return cls(conductor, row)

    # -- structure ----------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def __bool__(self) -> bool:
        return not self.is_zero

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("not rational")
        return self.coeffs[0]

    def in_conductor(self, n: int) -> "CyclotomicNumber":
        if n == self.conductor:
            return self
        if n % self.conductor:
            raise ValueError("can only embed into a multiple conductor")
        step = n // self.conductor
        rows = _power_basis_rows(n)
        deg = euler_phi(n)
        out = [Fraction(0)] * deg
        for k, c in enumerate(self.coeffs):
            if c:
                row = rows[(k * step) % n]
                for i in range(deg):
                    if row[i]:
                        out[i] += c * row[i]
        return CyclotomicNumber(n, out)

    @staticmethod
    def _promote(a: "CyclotomicNumber", b) -> tuple["CyclotomicNumber", "CyclotomicNumber"]:
        if isinstance(b, (int, Fraction)):
            b = CyclotomicNumber.from_rational(b, a.conductor)
        if not isinstance(b, CyclotomicNumber):
            return NotImplemented, NotImplemented
        n = lcm(a.conductor, b.conductor)
        return a.in_conductor(n), b.in_conductor(n)

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other):
        a, b = self._promote(self, other)
        if a is NotImplemented:
            return NotImplemented
        return CyclotomicNumber(a.conductor, [x + y for x, y in zip(a.coeffs, b.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicNumber(self.conductor, [-c for c in self.coeffs])

    def __sub__(self, other):
        a, b = self._promote(self, other)
        if a is NotImplemented:
            return NotImplemented
        return CyclotomicNumber(a.conductor, [x - y for x, y in zip(a.coeffs, b.coeffs)])

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            return CyclotomicNumber(self.conductor, [c * q for c in self.coeffs])
        a, b = self._promote(self, other)
        if a is NotImplemented:
            return NotImplemented
        n = a.conductor
        deg = len(a.coeffs)
        prod = [Fraction(0)] * (2 * deg - 1)
        for i, ci in enumerate(a.coeffs):
            if ci:
                for j, cj in enumerate(b.coeffs):
                    if cj:
                        prod[i + j] += ci * cj
        rows = _power_basis_rows(n)
        out = prod[:deg] + [Fraction(0)] * max(0, deg - len(prod))
        for e in range(deg, len(prod)):
            c = prod[e]
            if c:
                row = rows[e % n]
                for i in range(deg):
                    if row[i]:
                        out[i] += c * row[i]
        return CyclotomicNumber(n, out[:deg])

    __rmul__ = __mul__

    def inverse(self) -> "CyclotomicNumber":
        if self.is_zero:
            raise ZeroDivisionError("inverse of zero cyclotomic number")
        if self.is_rational():
            return CyclotomicNumber.from_rational(1 / self.coeffs[0], self.conductor)
        n = self.conductor
        deg = euler_phi(n)
        phi = [Fraction(c) for c in cyclotomic_polynomial(n)]
        # extended euclid over Q[x]; Phi_n irreducible so gcd(self, Phi_n) = 1
        # and s*self = gcd mod Phi_n at the end.
        r0, r1 = phi, _trim(list(self.coeffs))
        s0, s1 = [Fraction(0)], [Fraction(1)]
        while len(r1) > 1:
            q, r = _poly_divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _trim(_poly_sub(s0, _poly_mul(q, s1)))
            if not r1:
                raise ArithmeticError("element not invertible (degenerate input)")
        # here r1 is a nonzero constant c with s1*self = c mod Phi_n
        c = r1[0]
        inv = [x / c for x in s1]
        if len(inv) > deg:
            _, inv = _poly_divmod(inv, phi)
        inv = inv + [Fraction(0)] * (deg - len(inv))
        return CyclotomicNumber(n, inv[:deg])

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            if q == 0:
                raise ZeroDivisionError
            return CyclotomicNumber(self.conductor, [c / q for c in self.coeffs])
        a, b = self._promote(self, other)
        if a is NotImplemented:
            return NotImplemented
        return a * b.inverse()

    def __rtruediv__(self, other):
        return CyclotomicNumber.from_rational(other, self.conductor) / self

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction, CyclotomicNumber)):
            a, b = self._promote(self, other)
            return a.coeffs == b.coeffs
        return NotImplemented

    def __hash__(self):
        return hash((self.conductor, self.coeffs))

    # -- galois / embedding -------------------------------------------

    def conjugate(self) -> "CyclotomicNumber":
        """Complex conjugation, the Galois action zeta_N -> zeta_N^(N-1)."""
        n = self.conductor
        rows = _power_basis_rows(n)
        deg = len(self.coeffs)
        out = [Fraction(0)] * deg
        for k, c in enumerate(self.coeffs):
            if c:
                row = rows[(-k) % n]
                for i in range(deg):
                    if row[i]:
                        out[i] += c * row[i]
        return CyclotomicNumber(n, out)

    def is_real(self) -> bool:
        return self == self.conjugate()

    def to_complex(self) -> complex:
        n = self.conductor
        return sum(
            complex(c) * cmath.exp(2j * cmath.pi * k / n)
            for k, c in enumerate(self.coeffs)
            if c
        ) or 0j

    def __repr__(self) -> str:
        return f"CyclotomicNumber({self.conductor}, {[str(c) for c in self.coeffs]})"

    # -- serialization -------------------------------------------------

    def to_json(self) -> dict:
        return {
            "conductor": self.conductor,
            "coefficients": [str(c) for c in self.coeffs],
        }

    @classmethod
    def from_json(cls, obj) -> "CyclotomicNumber":
        if isinstance(obj, str):
            obj = json.loads(obj)
        return cls(obj["conductor"], [Fraction(c) for c in obj["coefficients"]])


def cyclo_arith(a: CyclotomicNumber, b: CyclotomicNumber, op: str) -> CyclotomicNumber:
    """Field arithmetic dispatcher, mostly for the wire/CLI layer."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown op {op!r}")


def conjugate(a: CyclotomicNumber) -> CyclotomicNumber:
    return a.conjugate()


def real_sign(a: CyclotomicNumber, start_prec: int = 64, max_prec: int = 1 << 16) -> int:
    """Sign of a real cyclotomic number under the fixed embedding.

    Uses outward-rounded interval evaluation with doubling precision; the
    exact zero test guarantees termination.

    >>> real_sign(CyclotomicNumber.root(8, 1) + CyclotomicNumber.root(8, 7))
    1
    >>> real_sign(CyclotomicNumber.root(3, 1) + CyclotomicNumber.root(3, 2))
    -1
    """
    if not a.is_real():
        raise ValueError("real_sign needs a real element")
    if a.is_zero:
        return 0
    n = a.conductor
    iv = mpmath.iv
    saved = iv.prec
    try:
        prec = start_prec
        while prec <= max_prec:
            iv.prec = prec
            total = iv.mpf(0)
            for k, c in enumerate(a.coeffs):
                if c:
                    coeff = iv.mpf(c.numerator) / iv.mpf(c.denominator)
                    total += coeff * iv.cos(2 * iv.pi * k / n)
            if total.a > 0:
                return 1
            if total.b < 0:
                return -1
            prec *= 2
    finally:
        iv.prec = saved
    raise ArithmeticError("interval refinement did not separate from zero")
