"""Fat-point conditions as interpolation matrices, and the initial-ideal count."""

from __future__ import annotations

import itertools

from ..numerics import binomial
from ..polys import compositions
from .cyclotomic import CycField
from .linalg import DEFAULT_MAX_BLOCK_ENTRIES, guard, rank


def _falling(b: int, a: int) -> int:
    out = 1
    for t in range(a):
        out *= b - t
    return out


def interpolation_rows(n: int, k: int, d: int, m: int) -> list:
    """Rows (point, alpha) of the evaluation matrix on degree-m monomials.

    Row (P, alpha) holds the value at P of the derivative d^alpha of each
    monomial x^beta: beta!/(beta-alpha)! * P^(beta-alpha), or 0 unless
    beta >= alpha.  P = [1 : xi^{g_1} : ... : xi^{g_n}].
    """
    F = CycField(k)
    cols = list(compositions(m, n + 1))
    alphas = [a for s in range(d) for a in compositions(s, n + 1)]
    rows = []
    for g in itertools.product(range(k), repeat=n):
        for alpha in alphas:
            row = {}
            for col, beta in enumerate(cols):
                if any(b < a for a, b in zip(alpha, beta)):
                    continue
                coeff = 1
                for a, b in zip(alpha, beta):
                    coeff *= _falling(b, a)
                expo = sum(gi * (b - a) for gi, a, b in zip(g, alpha[1:], beta[1:]))
                row[col] = F.root_power(expo) * coeff
            rows.append(row)
    return rows


def fat_oracle(n: int, k: int, d: int, m: int, max_block_entries=DEFAULT_MAX_BLOCK_ENTRIES) -> int:
    """HF(S / I_k^{(d)}, m) as the rank of the interpolation matrix over Q(xi)."""
    if m < 0:
        raise ValueError("degree must be nonnegative")
    n_rows = k ** n * binomial(n + d, n + 1)
    guard(n_rows, binomial(n + m, n), max_block_entries, "interpolation matrix")
    return rank(interpolation_rows(n, k, d, m))


def initial_ideal_hf(n: int, k: int, d: int, m: int) -> int:
    """HF of S / (x_1^k, ..., x_n^k)^d in degree m.

    x^a lies in the monomial ideal iff sum_{j>=1} floor(a_j / k) >= d, so
    we count degree-m exponents with that sum below d, variable by variable.
    """
    if m < 0:
        raise ValueError("degree must be nonnegative")
    # counts[s][q]: ways to pick a_1..a_t with sum s and floor-sum q < d
    counts = [[0] * d for _ in range(m + 1)]
    counts[0][0] = 1
    for _ in range(n):
        nxt = [[0] * d for _ in range(m + 1)]
        for s in range(m + 1):
            row = counts[s]
            for q in range(d):
                c = row[q]
                if not c:
                    continue
                for a in range(m - s + 1):
                    q2 = q + a // k
                    if q2 >= d:
                        break
                    nxt[s + a][q2] += c
        counts = nxt
    # x_0 absorbs the remaining degree
    return sum(sum(row) for row in counts)


def initial_ideal_hf_enumerated(n: int, k: int, d: int, m: int) -> int:
    """Same count by listing every monomial; for small cases only."""
    return sum(1 for a in compositions(m, n + 1) if sum(x // k for x in a[1:]) < d)
