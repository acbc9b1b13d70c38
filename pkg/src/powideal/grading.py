"""Multicyclic Z_k^{n+1} grading of C[x_0, ..., x_n].

A monomial x^a has multicyclic degree (a_0 mod k, ..., a_n mod k).  Graded
pieces S_{i,g} are nonzero exactly when i - wt(g) is a nonnegative multiple
of k, where wt(g) sums the representatives 0..k-1.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

from .numerics import binomial, multinomial, poly_pow


@dataclass(frozen=True)
class Params:
    """The triple (n, k, d): n+1 variables, k-th roots of unity, power (k-1)d."""

    n: int
    k: int
    d: int

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"n must be >= 0, got {self.n}")
        if self.k < 2:
            raise ValueError(f"k must be >= 2, got {self.k}")
        if self.d < 1:
            raise ValueError(f"d must be >= 1, got {self.d}")

    @property
    def D(self) -> int:
        return (self.k - 1) * self.d

    @property
    def nvars(self) -> int:
        return self.n + 1

    @property
    def top(self) -> int:
        """Degree kd: every form of this degree lies in the ideal."""
        return self.k * self.d


@dataclass(frozen=True)
class Multicycle:
    entries: tuple
    k: int

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(self.entries))
        if self.k < 1:
            raise ValueError("modulus must be positive")
        for e in self.entries:
            if not 0 <= e < self.k:
                raise ValueError(f"entry {e} out of range for k={self.k}")

    @classmethod
    def of_exponent(cls, a: Sequence[int], k: int) -> "Multicycle":
        return cls(tuple(x % k for x in a), k)

    def __len__(self):
        return len(self.entries)

    def __add__(self, other: "Multicycle") -> "Multicycle":
        return Multicycle(tuple((a + b) % self.k for a, b in zip(self.entries, other.entries)), self.k)

    def __sub__(self, other: "Multicycle") -> "Multicycle":
        return Multicycle(tuple((a - b) % self.k for a, b in zip(self.entries, other.entries)), self.k)

    def dot(self, other: "Multicycle") -> int:
        """Scalar product on the representatives 0..k-1."""
        return sum(a * b for a, b in zip(self.entries, other.entries))


def weight(m: Multicycle) -> int:
    return sum(m.entries)


def partition_vector(m: Multicycle) -> tuple:
    counts = [0] * m.k
    for e in m.entries:
        counts[e] += 1
    return tuple(counts)


def all_multicycles(length: int, k: int) -> Iterator[Multicycle]:
    """Z_k^length in lexicographic order."""
    for t in itertools.product(range(k), repeat=length):
        yield Multicycle(t, k)


def _graded_j(i: int, w: int, k: int):
    r = i - w
    if r < 0 or r % k:
        return None
    return r // k


def dim_graded_piece(p: Params, i: int, g: Multicycle) -> int:
    j = _graded_j(i, weight(g), p.k)
    return 0 if j is None else binomial(p.n + j, p.n)


def in_G(p: Params, i: int, g: Multicycle) -> bool:
    return _graded_j(i, weight(g), p.k) is not None


@functools.lru_cache(maxsize=None)
def weight_counts(n: int, k: int) -> tuple:
    """N_h for h = 0..(k-1)(n+1): number of g in Z_k^{n+1} with wt(g) = h."""
    if n < 0 or k < 2:
        raise ValueError("need n >= 0 and k >= 2")
    out = []
    for h in range((k - 1) * (n + 1) + 1):
        out.append(sum((-1) ** s * binomial(n + 1, s) * binomial(n + h - k * s, n)
                       for s in range(h // k + 1)))
    return tuple(out)


def weight_counts_by_power(n: int, k: int) -> tuple:
    """Coefficients of (1 + x + ... + x^{k-1})^{n+1}; independent check on weight_counts."""
    return poly_pow((1,) * k, n + 1)


def weight_counts_by_enumeration(n: int, k: int) -> tuple:
    out = [0] * ((k - 1) * (n + 1) + 1)
    for g in itertools.product(range(k), repeat=n + 1):
        out[sum(g)] += 1
    return tuple(out)


def gens_count(p: Params) -> int:
    """Number of minimal generators psi_g, i.e. |G_{k,n,D}|."""
    N = weight_counts(p.n, p.k)
    return sum(N[h] for h in range(min(p.D, len(N) - 1) + 1) if (p.D - h) % p.k == 0)


def gens_count_multinomial(p: Params) -> int:
    """|G_{k,n,D}| by summing over partition vectors (nu_0, ..., nu_{k-1}).

    For each i >= 0 and nu_2..nu_{k-1} >= 0 the remaining parts are forced:
    nu_1 = D - ki - sum_j j nu_j and nu_0 = n + 1 - nu_1 - sum_j nu_j.
    """
    n1, k, D = p.n + 1, p.k, p.D
    total = 0
    for i in range(D // k + 1):
        rest = D - k * i
        for nus in _bounded_tuples(k - 2, n1):
            nu1 = rest - sum(j * v for j, v in zip(range(2, k), nus))
            if nu1 < 0:
                continue
            nu0 = n1 - nu1 - sum(nus)
            total += multinomial(n1, (nu0, nu1) + nus)
    return total


def _bounded_tuples(length: int, bound: int):
    # tuples of nonnegative ints with sum <= bound
    if length == 0:
        yield ()
        return
    for first in range(bound + 1):
        for rest in _bounded_tuples(length - 1, bound - first):
            yield (first,) + rest


def phi_independent_k2(p: Params) -> bool:
    """Whether the 2^n generators (x_0 +- x_1 +- ... +- x_n)^d are linearly independent."""
    if p.k != 2:
        raise ValueError("criterion only stated for k = 2")
    return p.n + 1 <= p.d
