"""Fat points of multiplicity d on the k^n points [1 : xi^{g_1} : ... : xi^{g_n}].

The ideal I_k^{(d)} equals (Q_1, ..., Q_n)^d with Q_j = x_j^k - x_0^k, has a
pure resolution with shifts kd, kd+k, ..., kd+k(n-1), and via Macaulay
duality its graded dimensions are the Hilbert function of R_{n,k,d}.
"""

from __future__ import annotations

from dataclasses import dataclass

from .grading import Params
from .numerics import UniPoly, binomial, expand_series, trim
from .polys import SparseIntPoly, compositions, product


@dataclass(frozen=True)
class BettiTable:
    n: int
    k: int
    d: int
    entries: tuple  # ((i, shift, beta_i), ...) for i = 1..n

    @property
    def values(self) -> tuple:
        return tuple(b for _, _, b in self.entries)

    @property
    def shifts(self) -> tuple:
        return tuple(s for _, s, _ in self.entries)


@dataclass(frozen=True)
class FatPointSeries:
    numerator: UniPoly
    denom_exponent: int

    def expand(self, up_to: int) -> list:
        return expand_series(self.numerator, self.denom_exponent, up_to)


def _check(n: int, k: int, d: int, min_n: int = 0) -> None:
    if n < min_n or k < 2 or d < 1:
        raise ValueError(f"invalid fat-point parameters n={n}, k={k}, d={d}")


def betti_number(n: int, d: int, i: int) -> int:
    return binomial(d + i - 2, i - 1) * binomial(d + n - 1, n - i)


def betti(n: int, k: int, d: int) -> BettiTable:
    _check(n, k, d, min_n=1)
    entries = tuple((i, k * d + k * (i - 1), betti_number(n, d, i)) for i in range(1, n + 1))
    return BettiTable(n, k, d, entries)


def fat_series(n: int, k: int, d: int) -> FatPointSeries:
    _check(n, k, d)
    num = [0] * (k * d + k * max(n - 1, 0) + 1)
    num[0] = 1
    for i in range(1, n + 1):
        num[k * d + k * (i - 1)] += (-1) ** i * betti_number(n, d, i)
    return FatPointSeries(trim(num), n + 1)


def multiplicity(n: int, k: int, d: int) -> int:
    """Degree of the scheme: k^n points, each of length C(d+n-1, n)."""
    return k ** n * binomial(d + n - 1, n)


def regularity_bound(n: int, k: int, d: int) -> int:
    """Degree from which the Hilbert function is constant (at the latest)."""
    return k * d + k * max(n - 1, 0)


def fat_hf(n: int, k: int, d: int, m: int) -> int:
    if m < 0:
        raise ValueError("degree must be nonnegative")
    return fat_series(n, k, d).expand(m)[m]


def fat_hf_table(n: int, k: int, d: int, up_to: int) -> list:
    return fat_series(n, k, d).expand(up_to)


def piecewise_k2(n: int, d: int, m: int):
    """Closed-form branches of HF(S/I^{(d)}, m) on the (+-1)-points.

    Returns None in the window 2d+2 <= m < 2d+n-2 that no branch covers.
    Branches that overlap for small n are all checked to agree.
    """
    candidates = []
    if m <= 2 * d - 1:
        candidates.append(binomial(n + m, n))
    if m == 2 * d:
        candidates.append(binomial(n + 2 * d, n) - binomial(d + n - 1, n - 1))
    if m == 2 * d + 1:
        candidates.append(binomial(n + 2 * d + 1, n) - (n + 1) * binomial(d + n - 1, n - 1))
    if m >= 2 * d + n - 2:
        candidates.append(2 ** n * binomial(n + d - 1, n))
    if not candidates:
        return None
    if len(set(candidates)) != 1:
        raise ArithmeticError(f"overlapping branches disagree at n={n}, d={d}, m={m}: {candidates}")
    return candidates[0]


def fat_generators(n: int, k: int, d: int) -> list:
    """All products Q_1^{i_1} ... Q_n^{i_n} with i_1 + ... + i_n = d, Q_j = x_j^k - x_0^k."""
    _check(n, k, d, min_n=1)
    nv = n + 1
    x0k = SparseIntPoly.variable(nv, 0, k)
    Q = [SparseIntPoly.variable(nv, j, k) - x0k for j in range(1, n + 1)]
    gens = []
    for idx in compositions(d, n):
        gens.append(product((Q[j] ** e for j, e in enumerate(idx) if e), nv))
    return gens


def ideal_dim_by_duality(p: Params, j: int) -> int:
    """dim of I_k^{(j+1)} in degree (k-1)d + j, for any j >= 0."""
    i = p.D + j
    return binomial(p.n + i, p.n) - fat_hf(p.n, p.k, j + 1, i)


def duality_hf(p: Params, j: int) -> int:
    """HF(R_{n,k,d}; (k-1)d + j) predicted through the fat-point scheme of multiplicity j+1."""
    if not 0 <= j <= p.d - 2:
        raise ValueError(f"j must lie in 0..{p.d - 2}, got {j}")
    return ideal_dim_by_duality(p, j)


def comp_sum(p: Params, j: int) -> int:
    n, k, d = p.n, p.k, p.d
    span = (k - 1) * (d - j)
    total = 0
    for s in range(1, n + 1):
        if k * s > span:
            continue
        total += ((-1) ** (s + 1) * binomial(n + span - k * s, n)
                  * binomial(j + s - 1, s - 1) * binomial(j + n, n - s))
    return total


def comp_formula(p: Params, j: int) -> int:
    """Alternating closed form of dim [I_k^{(j+1)}]_{(k-1)d+j}, for 0 <= j <= d-2."""
    if not 0 <= j <= p.d - 2:
        raise ValueError(f"j must lie in 0..{p.d - 2}, got {j}")
    return comp_sum(p, j)
