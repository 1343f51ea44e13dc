"""Exact arithmetic in cyclotomic fields Q(zeta_N).

A scalar is a residue modulo the N-th cyclotomic polynomial Phi_N, stored as a
dense tuple of ``Fraction`` coefficients of length phi(N) = deg Phi_N.  All
operations are exact and closed; equality is decidable.  Scalars of different
conductors are combined by embedding both into Q(zeta_lcm) via
zeta_M -> zeta_L^(L/M), so a computation lives in a single fixed field chosen
as the lcm of the conductors that actually appear.

Rationals are the conductor-1 scalars (Phi_1 = x - 1, so the residue is the
constant term, independent of any embedding).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_n, constant term first."""
    if n < 1:
        raise ValueError("conductor must be positive")
    # x^n - 1 divided by the product of Phi_d for proper divisors d.
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly = _polydiv_exact(poly, list(cyclotomic_polynomial(d)))
    return tuple(poly)


def _polydiv_exact(num: list[int], den: list[int]) -> list[int]:
    # Exact division of integer polynomials, den monic up to sign.
    num = num[:]
    out = [0] * (len(num) - len(den) + 1)
    lead = den[-1]
    for i in range(len(out) - 1, -1, -1):
        c = num[i + len(den) - 1]
        q, r = divmod(c, lead)
        if r:
            raise ArithmeticError("non-exact polynomial division")
        out[i] = q
        for j, dj in enumerate(den):
            num[i + j] -= q * dj
    if any(num[: len(den) - 1]):
        raise ArithmeticError("nonzero remainder")
    return out


@lru_cache(maxsize=None)
def _euler_phi(n: int) -> int:
    return len(cyclotomic_polynomial(n)) - 1


@lru_cache(maxsize=None)
def _power_table(n: int) -> tuple[tuple[Fraction, ...], ...]:
    """x^k mod Phi_n for k = 0 .. 2*phi(n)-2, as coefficient rows."""
    d = _euler_phi(n)
    phi = cyclotomic_polynomial(n)
    rows: list[tuple[Fraction, ...]] = []
    cur = [Fraction(0)] * d
    cur[0] = Fraction(1)
    rows.append(tuple(cur))
    for _ in range(2 * d - 2):
        nxt = [Fraction(0)] + cur[:]
        top = nxt.pop()  # coefficient of x^d
        if top:
            for j in range(d):
                nxt[j] -= top * phi[j]
        cur = nxt
        rows.append(tuple(cur))
    return tuple(rows)


class CycScalar:
    """An element of Q(zeta_N), reduced modulo Phi_N."""

    __slots__ = ("conductor", "coeffs")

    def __init__(self, conductor: int, coeffs) -> None:
        d = _euler_phi(conductor)
        cs = [Fraction(c) for c in coeffs]
        if len(cs) > d:
            cs = _reduce_mod_phi(conductor, cs)
        else:
            cs = cs + [Fraction(0)] * (d - len(cs))
        self.conductor = conductor
        self.coeffs = tuple(cs)

    # -- constructors ------------------------------------------------------

    @staticmethod
    def from_rational(q) -> "CycScalar":
        return CycScalar(1, [Fraction(q)])

    @staticmethod
    def zeta(n: int, power: int = 1) -> "CycScalar":
        power %= n
        coeffs = [Fraction(0)] * (power + 1)
        coeffs[power] = Fraction(1)
        return CycScalar(n, coeffs)

    # -- field embedding ---------------------------------------------------

    def promote(self, n: int) -> "CycScalar":
        """Image under Q(zeta_M) -> Q(zeta_n), zeta_M -> zeta_n^(n/M)."""
        m = self.conductor
        if n == m:
            return self
        if n % m:
            raise ValueError(f"no embedding of Q(zeta_{m}) into Q(zeta_{n})")
        step = n // m
        out = [Fraction(0)] * n
        for k, c in enumerate(self.coeffs):
            if c:
                out[(k * step) % n] += c
        return CycScalar(n, out)

    def _pair(self, other) -> tuple["CycScalar", "CycScalar"]:
        if not isinstance(other, CycScalar):
            other = CycScalar.from_rational(other)
        n = self.conductor * other.conductor // gcd(self.conductor, other.conductor)
        return self.promote(n), other.promote(n)

    # -- ring/field operations ---------------------------------------------

    def __add__(self, other):
        a, b = self._pair(other)
        return CycScalar(a.conductor, [x + y for x, y in zip(a.coeffs, b.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return CycScalar(self.conductor, [-c for c in self.coeffs])

    def __sub__(self, other):
        a, b = self._pair(other)
        return CycScalar(a.conductor, [x - y for x, y in zip(a.coeffs, b.coeffs)])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            f = Fraction(other)
            return CycScalar(self.conductor, [c * f for c in self.coeffs])
        a, b = self._pair(other)
        d = len(a.coeffs)
        conv = [Fraction(0)] * (2 * d - 1)
        for i, x in enumerate(a.coeffs):
            if x:
                for j, y in enumerate(b.coeffs):
                    if y:
                        conv[i + j] += x * y
        table = _power_table(a.conductor)
        out = [Fraction(0)] * d
        for k, c in enumerate(conv):
            if c:
                row = table[k]
                for j in range(d):
                    if row[j]:
                        out[j] += c * row[j]
        return CycScalar(a.conductor, out)

    __rmul__ = __mul__

    def inverse(self) -> "CycScalar":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero cyclotomic scalar")
        n = self.conductor
        phi = [Fraction(c) for c in cyclotomic_polynomial(n)]
        # Extended Euclid over Q[x]: s*self + t*Phi_n = 1.
        r0, r1 = phi, list(self.coeffs)
        s0, s1 = [Fraction(0)], [Fraction(1)]
        while _degree(r1) > 0:
            q = _polydivmod(r0, r1)
            r0, r1 = r1, _polysub(r0, _polymul(q, r1))
            s0, s1 = s1, _polysub(s0, _polymul(q, s1))
        if _degree(r1) < 0:
            raise ZeroDivisionError("inverse of zero cyclotomic scalar")
        c = r1[0]
        return CycScalar(n, [x / c for x in s1])

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            f = Fraction(other)
            return CycScalar(self.conductor, [c / f for c in self.coeffs])
        a, b = self._pair(other)
        return a * b.inverse()

    def __rtruediv__(self, other):
        return CycScalar.from_rational(other) / self

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = CycScalar.from_rational(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # -- predicates ----------------------------------------------------------

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def as_rational(self):
        """The value as a Fraction, or None if not rational."""
        if self.conductor == 1:
            return self.coeffs[0]
        if all(c == 0 for c in self.coeffs[1:]):
            return self.coeffs[0]
        # Rational values can hide in a nontrivial basis only for non-reduced
        # representations, which reduction mod Phi_N already rules out.
        return None

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = CycScalar.from_rational(other)
        if not isinstance(other, CycScalar):
            return NotImplemented
        a, b = self._pair(other)
        return a.coeffs == b.coeffs

    def __hash__(self):
        r = self.as_rational()
        if r is not None:
            return hash(r)
        return hash((self.conductor, self.coeffs))

    def __repr__(self):
        r = self.as_rational()
        if r is not None:
            return f"CycScalar({r})"
        return f"CycScalar(zeta{self.conductor}; {list(map(str, self.coeffs))})"

    def galois_conjugate(self, k: int) -> "CycScalar":
        """Image under zeta -> zeta^k, gcd(k, N) = 1."""
        n = self.conductor
        if gcd(k, n) != 1:
            raise ValueError("not a Galois automorphism")
        out = [Fraction(0)] * n
        for i, c in enumerate(self.coeffs):
            if c:
                out[(i * k) % n] += c
        return CycScalar(n, out)

    def complex_value(self) -> complex:
        """Float approximation, for diagnostics only."""
        import cmath

        z = cmath.exp(2j * cmath.pi / self.conductor)
        return sum(float(c) * z**k for k, c in enumerate(self.coeffs))


def _reduce_mod_phi(n: int, coeffs: list[Fraction]) -> list[Fraction]:
    phi = cyclotomic_polynomial(n)
    d = len(phi) - 1
    cs = coeffs[:]
    for i in range(len(cs) - 1, d - 1, -1):
        c = cs[i]
        if c:
            for j in range(d + 1):
                cs[i - d + j] -= c * phi[j]
    return [Fraction(c) for c in cs[:d]]


def _degree(p: list[Fraction]) -> int:
    for i in range(len(p) - 1, -1, -1):
        if p[i]:
            return i
    return -1


def _polymul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return out


def _polysub(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * max(len(a), len(b))
    for i, x in enumerate(a):
        out[i] += x
    for i, y in enumerate(b):
        out[i] -= y
    return out


def _polydivmod(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    """Quotient of a by b over Q (remainder discarded by the caller)."""
    da, db = _degree(a), _degree(b)
    q = [Fraction(0)] * max(da - db + 1, 1)
    r = a[:]
    while _degree(r) >= db:
        d = _degree(r)
        c = r[d] / b[db]
        q[d - db] = c
        for j in range(db + 1):
            r[d - db + j] -= c * b[j]
    return q


ZERO = CycScalar.from_rational(0)
ONE = CycScalar.from_rational(1)


def lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


def common_conductor(values) -> int:
    n = 1
    for v in values:
        if isinstance(v, CycScalar):
            n = lcm(n, v.conductor)
    return n
