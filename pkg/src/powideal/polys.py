"""Sparse multivariate polynomials keyed by exponent tuples."""

from __future__ import annotations

import re
from typing import Dict, Iterator, Tuple

Exponent = Tuple[int, ...]


def compositions(total: int, parts: int) -> Iterator[Exponent]:
    """All exponent vectors of length ``parts`` summing to ``total``.

    Yielded in graded-lex order (x_0 > x_1 > ...), i.e. the first entry
    decreases fastest.
    """
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


class SparseIntPoly:
    """Polynomial in nvars variables with integer coefficients.

    Zero coefficients are never stored.
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Dict[Exponent, int] | None = None):
        self.nvars = nvars
        self.terms: Dict[Exponent, int] = {}
        if terms:
            for e, c in terms.items():
                if len(e) != nvars:
                    raise ValueError(f"exponent {e} has wrong length for {nvars} variables")
                if c:
                    self.terms[tuple(e)] = c

    @classmethod
    def variable(cls, nvars: int, index: int, power: int = 1) -> "SparseIntPoly":
        e = [0] * nvars
        e[index] = power
        return cls(nvars, {tuple(e): 1})

    @classmethod
    def constant(cls, nvars: int, c: int) -> "SparseIntPoly":
        return cls(nvars, {(0,) * nvars: c})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, SparseIntPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __add__(self, other: "SparseIntPoly") -> "SparseIntPoly":
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return SparseIntPoly(self.nvars, out)

    def __neg__(self) -> "SparseIntPoly":
        return SparseIntPoly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "SparseIntPoly") -> "SparseIntPoly":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return SparseIntPoly(self.nvars, {e: c * other for e, c in self.terms.items()})
        out: Dict[Exponent, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return SparseIntPoly(self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "SparseIntPoly":
        out = SparseIntPoly.constant(self.nvars, 1)
        base = self
        while e:
            if e & 1:
                out = out * base
            e >>= 1
            if e:
                base = base * base
        return out

    def degrees(self) -> set:
        return {sum(e) for e in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def total_degree(self) -> int:
        return max(self.degrees(), default=-1)

    def sorted_terms(self):
        """Terms in graded-lex order, largest first."""
        return sorted(self.terms.items(), key=lambda t: (sum(t[0]), t[0]), reverse=True)

    def to_text(self) -> str:
        """Render as ``c*x0^a0*x1^a1...`` joined by +/-; exponent 1 and 0 handled
        as ``x1`` and omitted respectively."""
        if not self.terms:
            return "0"
        chunks = []
        for i, (e, c) in enumerate(self.sorted_terms()):
            factors = []
            for v, a in enumerate(e):
                if a == 1:
                    factors.append(f"x{v}")
                elif a > 1:
                    factors.append(f"x{v}^{a}")
            mag = abs(c)
            body = "*".join(([str(mag)] if mag != 1 or not factors else []) + factors)
            sign = "-" if c < 0 else "+"
            if i == 0:
                chunks.append(("-" if c < 0 else "") + body)
            else:
                chunks.append(f" {sign} {body}")
        return "".join(chunks)

    @classmethod
    def from_text(cls, text: str, nvars: int) -> "SparseIntPoly":
        """Inverse of :meth:`to_text`."""
        s = text.replace(" ", "")
        if s == "0":
            return cls(nvars)
        out = cls(nvars)
        for sign, body in re.findall(r"([+-]?)([^+-]+)", s):
            coeff = -1 if sign == "-" else 1
            e = [0] * nvars
            for factor in body.split("*"):
                if factor.startswith("x"):
                    name, _, power = factor.partition("^")
                    e[int(name[1:])] += int(power) if power else 1
                else:
                    coeff *= int(factor)
            out = out + cls(nvars, {tuple(e): coeff})
        return out

    def __repr__(self):
        return f"SparseIntPoly({self.nvars}, {self.to_text()!r})"


def linear_sum(nvars: int) -> SparseIntPoly:
    return SparseIntPoly(nvars, {e: 1 for e in compositions(1, nvars)})


def monomial_count(nvars: int, degree: int) -> int:
    return sum(1 for _ in compositions(degree, nvars))


def product(polys, nvars: int) -> SparseIntPoly:
    out = SparseIntPoly.constant(nvars, 1)
    for p in polys:
        out = out * p
    return out
