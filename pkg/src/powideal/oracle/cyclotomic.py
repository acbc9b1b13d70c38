"""Arithmetic in Q(xi), xi a primitive k-th root of unity.

Elements are stored as an integer coefficient tuple over the power basis
1, xi, ..., xi^{phi(k)-1} together with a positive common denominator,
reduced modulo the k-th cyclotomic polynomial.
"""

from __future__ import annotations

import functools
from fractions import Fraction
from math import gcd

from ..numerics import UniPoly, trim


def _divmod_monic(num: list, den: UniPoly) -> tuple:
    """Exact integer division of polynomials by a monic divisor."""
    num = list(num)
    dq = len(den) - 1
    if len(num) - 1 < dq:
        return [], trim(num)
    q = [0] * (len(num) - dq)
    for i in range(len(num) - 1, dq - 1, -1):
        c = num[i]
        if c:
            q[i - dq] = c
            for t, dc in enumerate(den):
                num[i - dq + t] -= c * dc
    return trim(q), trim(num)


@functools.lru_cache(maxsize=None)
def cyclotomic_poly(k: int) -> UniPoly:
    """Phi_k as a coefficient tuple (constant term first)."""
    if k < 1:
        raise ValueError("k must be positive")
    num = [-1] + [0] * (k - 1) + [1]  # x^k - 1
    for j in range(1, k):
        if k % j == 0:
            num, rem = _divmod_monic(num, cyclotomic_poly(j))
            assert not rem
            num = list(num)
    return tuple(num)


class CycField:
    """The field Q(xi) for a fixed k; builds and caches reduction tables."""

    _instances: dict = {}

    def __new__(cls, k: int):
        inst = cls._instances.get(k)
        if inst is None:
            inst = super().__new__(cls)
            inst._setup(k)
            cls._instances[k] = inst
        return inst

    def _setup(self, k: int) -> None:
        self.k = k
        self.modulus = cyclotomic_poly(k)
        self.degree = len(self.modulus) - 1
        # x^e mod Phi_k for e < 2*degree - 1 and for e < k (roots of unity)
        top = max(2 * self.degree - 1, k)
        self._power_table = []
        cur = [1] + [0] * (self.degree - 1)
        for _ in range(top):
            self._power_table.append(tuple(cur))
            # multiply by x and reduce
            carry = cur[-1]
            cur = [0] + cur[:-1]
            if carry:
                for t in range(self.degree):
                    cur[t] -= carry * self.modulus[t]
        self.zero = CycNumber(self, (0,) * self.degree, 1)
        self.one = CycNumber(self, (1,) + (0,) * (self.degree - 1), 1)

    def __repr__(self):
        return f"CycField({self.k})"

    def reduce(self, coeffs) -> tuple:
        """Reduce an integer coefficient list of any length modulo Phi_k."""
        dg = self.degree
        out = list(coeffs[:dg]) + [0] * (dg - min(len(coeffs), dg))
        table = self._power_table
        for e in range(dg, len(coeffs)):
            c = coeffs[e]
            if c:
                row = table[e % self.k]  # x^k = 1 mod Phi_k
                for t in range(dg):
                    out[t] += c * row[t]
        return tuple(out)

    def root_power(self, e: int) -> "CycNumber":
        """xi^e for any integer e."""
        return CycNumber(self, self._power_table[e % self.k], 1)

    def from_int(self, c: int) -> "CycNumber":
        return CycNumber(self, (c,) + (0,) * (self.degree - 1), 1)

    def from_fractions(self, coeffs) -> "CycNumber":
        fr = [Fraction(c) for c in coeffs]
        den = 1
        for f in fr:
            den = den * f.denominator // gcd(den, f.denominator)
        return CycNumber(self, self.reduce([int(f * den) for f in fr]), den)


class CycNumber:
    __slots__ = ("field", "num", "den")

    def __init__(self, field: CycField, num: tuple, den: int = 1, normalize: bool = True):
        self.field = field
        if normalize:
            if den < 0:
                num, den = tuple(-c for c in num), -den
            g = den
            for c in num:
                if g == 1:
                    break
                g = gcd(g, c)
            if g > 1:
                num = tuple(c // g for c in num)
                den //= g
            if not any(num):
                den = 1
        self.num = num
        self.den = den

    def _coerce(self, other) -> "CycNumber":
        if isinstance(other, CycNumber):
            return other
        if isinstance(other, int):
            return self.field.from_int(other)
        if isinstance(other, Fraction):
            return self.field.from_fractions([other])
        return NotImplemented

    def is_zero(self) -> bool:
        return not any(self.num)

    def __bool__(self):
        return any(self.num)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        return hash((self.field.k, self.num, self.den))

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if self.den == o.den:
            return CycNumber(self.field, tuple(a + b for a, b in zip(self.num, o.num)), self.den)
        return CycNumber(self.field, tuple(a * o.den + b * self.den for a, b in zip(self.num, o.num)),
                         self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return CycNumber(self.field, tuple(-a for a in self.num), self.den, normalize=False)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        a, b = self.num, o.num
        dg = len(a)
        if dg == 1:
            return CycNumber(self.field, (a[0] * b[0],), self.den * o.den)
        prod = [0] * (2 * dg - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        return CycNumber(self.field, self.field.reduce(prod), self.den * o.den)

    __rmul__ = __mul__

    def inverse(self) -> "CycNumber":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in Q(xi)")
        if len(self.num) == 1:
            return CycNumber(self.field, (self.den,), self.num[0])
        # extended Euclid in Q[x], tracking r_i = s_i * a (mod Phi_k)
        r0 = [Fraction(c) for c in self.field.modulus]
        r1 = [Fraction(c) for c in trim(self.num)]
        s0, s1 = [], [Fraction(1)]
        while len(r1) > 1:
            q, r = _poly_divmod_q(r0, r1)
            if not r:
                raise ArithmeticError(f"Phi_{self.field.k} is not coprime to {self!r}")
            r0, r1 = r1, r
            s0, s1 = s1, _poly_sub_q(s0, _poly_mul_q(q, s1))
        c = r1[0]
        inv = self.field.from_fractions([x / c for x in s1])
        return inv * self.den

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def to_fractions(self) -> tuple:
        return tuple(Fraction(c, self.den) for c in self.num)

    def __repr__(self):
        terms = []
        for e, c in enumerate(self.to_fractions()):
            if c:
                terms.append(f"{c}" + ("" if e == 0 else f"*xi^{e}"))
        return f"CycNumber(k={self.field.k}: " + (" + ".join(terms) or "0") + ")"


def _poly_trim_q(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_divmod_q(a, b):
    a = list(a)
    b = _poly_trim_q(b)
    if len(a) < len(b):
        return [], _poly_trim_q(a)
    q = [Fraction(0)] * (len(a) - len(b) + 1)
    lead = b[-1]
    for i in range(len(a) - len(b), -1, -1):
        c = a[i + len(b) - 1] / lead
        q[i] = c
        if c:
            for t, bc in enumerate(b):
                a[i + t] -= c * bc
    return _poly_trim_q(q), _poly_trim_q(a[: len(b) - 1])


def _poly_mul_q(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return _poly_trim_q(out)


def _poly_sub_q(a, b):
    n = max(len(a), len(b))
    a = list(a) + [Fraction(0)] * (n - len(a))
    b = list(b) + [Fraction(0)] * (n - len(b))
    return _poly_trim_q([x - y for x, y in zip(a, b)])
