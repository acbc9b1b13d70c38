"""Hilbert functions and series of R = S / I_{n,k,d}.

The ideal I_{n,k,d} is generated by the k^n forms
(x_0 + xi^{g_1} x_1 + ... + xi^{g_n} x_n)^{(k-1)d}.  It contains every form of
degree kd - 1 and above, so tables are materialized on degrees 0..kd-1 only.
"""

from __future__ import annotations

from dataclasses import dataclass

from .grading import Params, weight_counts
from .numerics import UniPoly, binomial, expand_series, numerator_of

PROVED_K2 = "proved-k2"
CONJECTURED = "conjectured"
ORACLE = "oracle"
DUALITY = "duality"
COMP = "comp"
SERIES = "series"

METHODS = (PROVED_K2, CONJECTURED, ORACLE, DUALITY, COMP, SERIES)


@dataclass(frozen=True)
class HilbertFunction:
    params: Params
    values: tuple
    method: str

    @property
    def conjectural(self) -> bool:
        return self.method == CONJECTURED and self.params.k > 2

    def __getitem__(self, i: int) -> int:
        if i < 0:
            raise IndexError(i)
        return self.values[i] if i < len(self.values) else 0


@dataclass(frozen=True)
class HilbertSeries:
    numerator: UniPoly
    denom_exponent: int

    def expand(self, up_to: int) -> list:
        return expand_series(self.numerator, self.denom_exponent, up_to)


def default_method(p: Params) -> str:
    return PROVED_K2 if p.k == 2 else CONJECTURED


def hf_proved_k2(p: Params, i: int) -> int:
    """HF(R; i) for k = 2 by summing over weights of Z_2^{n+1}."""
    if p.k != 2:
        raise ValueError("hf_proved_k2 requires k = 2")
    if i < 0:
        raise ValueError("degree must be nonnegative")
    n, d = p.n, p.d
    if i < d:
        return binomial(n + i, n)
    j = i - d
    base = binomial(n + j, n)
    total = 0
    for h in range(0, d - j):
        if (i - h) % 2:
            continue
        mult = binomial(n + 1, h)
        if not mult:
            continue
        term = binomial(n + (i - h) // 2, n) - base
        assert term > 0 or (n == 0 and term == 0), (p, i, h)
        total += mult * term
    return total


def hf_conjectured(p: Params, i: int) -> int:
    """HF(R; i) by weight counting for any k (unproved for k > 2)."""
    if i < 0:
        raise ValueError("degree must be nonnegative")
    n, k, d, D = p.n, p.k, p.d, p.D
    if i < D:
        return binomial(n + i, n)
    j = i - D
    if j > d - 2:
        return 0
    N = weight_counts(n, k)
    hmax = (k - 1) * (n + 1)
    base = binomial(n + j, n)
    total = 0
    for h in range(0, min((k - 1) * (d - j), hmax + 1)):
        if (i - h) % k:
            continue
        total += N[h] * (binomial(n + (i - h) // k, n) - base)
    return total


def weight_blocks(p: Params, i: int) -> list:
    """Per-weight contributions (h, N_h, dim R_{i,h}) used by hf_conjectured at i >= D."""
    n, k, d, D = p.n, p.k, p.d, p.D
    j = i - D
    if j < 0 or j > d - 2:
        return []
    N = weight_counts(n, k)
    base = binomial(n + j, n)
    out = []
    for h in range(0, min((k - 1) * (d - j), len(N))):
        if (i - h) % k == 0:
            out.append((h, N[h], binomial(n + (i - h) // k, n) - base))
    return out


def hf_value(p: Params, i: int, method: str) -> int:
    if method == PROVED_K2:
        return hf_proved_k2(p, i)
    if method == CONJECTURED:
        return hf_conjectured(p, i)
    if method in (DUALITY, COMP):
        if i < p.D:
            return binomial(p.n + i, p.n)
        from . import fatpoints
        j = i - p.D
        fn = fatpoints.ideal_dim_by_duality if method == DUALITY else fatpoints.comp_sum
        return fn(p, j)
    if method == SERIES:
        return series_closed_form(p).expand(i)[i]
    if method == ORACLE:
        from .oracle import hf_oracle
        return hf_oracle(p, i)
    raise ValueError(f"unknown method {method!r}")


def hf_table(p: Params, method: str | None = None, **oracle_opts) -> HilbertFunction:
    """Full table on degrees 0..kd-1 using the requested engine."""
    method = method or default_method(p)
    if method not in METHODS:
        raise ValueError(f"unknown method {method!r}")
    if method == PROVED_K2 and p.k != 2:
        raise ValueError("proved-k2 engine requires k = 2")
    if method == SERIES:
        values = series_closed_form(p).expand(p.top - 1)
    elif method == ORACLE:
        from .oracle import hf_oracle
        values = [hf_oracle(p, i, **oracle_opts) for i in range(p.top)]
    else:
        values = [hf_value(p, i, method) for i in range(p.top)]
    return HilbertFunction(p, tuple(values), method)


def series_closed_form(p: Params) -> HilbertSeries:
    """Closed-form Hilbert series numerators for k = 2 and 2, 3 or 4 variables."""
    n, d = p.n, p.d
    if p.k != 2 or n not in (1, 2, 3):
        raise ValueError("closed form known only for k = 2 and n in {1, 2, 3}")
    num = [0] * (2 * d + 3)
    if n == 1:
        num[0], num[d], num[2 * d] = 1, -2, 1
    elif n == 2:
        if d < 2:
            raise ValueError("closed form for n = 2 needs d >= 2")
        num[0] = 1
        num[d] -= 4
        num[2 * d - 1] += d
        num[2 * d] += 3
        num[2 * d + 1] -= d
    else:
        if d < 3:
            raise ValueError("closed form for n = 3 needs d >= 3")
        num[0] = 1
        num[d] -= 8
        num[2 * d - 2] += binomial(d, 2)
        num[2 * d - 1] += 4 * d
        num[2 * d] -= d * d - 7
        num[2 * d + 1] -= 4 * d
        num[2 * d + 2] += binomial(d + 1, 2)
    while num and num[-1] == 0:
        num.pop()
    return HilbertSeries(tuple(num), n + 1)


def numerator_from_hf(hf: HilbertFunction) -> HilbertSeries:
    """Numerator of the Hilbert series of an Artinian quotient from its table."""
    values = list(hf.values)
    if not values or values[-1] != 0:
        raise ValueError("table does not end in a zero; quotient not shown to be Artinian")
    return HilbertSeries(numerator_of(values, hf.params.n + 1), hf.params.n + 1)


def top_socle_predictions(p: Params) -> tuple:
    """Closed forms for (HF(2d-2), HF(2d-3)) when k = 2 and d >= 3.

    In degree 2d-2 only the zero multicycle survives; in degree 2d-3 only the
    n+1 multicycles of weight one do, each contributing C(n+d-3, n-1).
    """
    if p.k != 2:
        raise ValueError("requires k = 2")
    if p.d < 3 or p.n < 1:
        raise ValueError("requires d >= 3 and n >= 1")
    n, d = p.n, p.d
    return binomial(n + d - 2, n - 1), (n + 1) * binomial(n + d - 3, n - 1)


def quoted_top_values(p: Params) -> tuple:
    """The pair (C(n+d-2, n-1), (n+1) C(n+d-2, n-1)) exactly as sometimes quoted.

    The second entry disagrees with hf_proved_k2 as soon as n >= 2 (for
    n=3, d=5 it gives 60 where the table has 40); see :func:`top_socle_report`.
    """
    n, d = p.n, p.d
    c = binomial(n + d - 2, n - 1)
    return c, (n + 1) * c


def top_socle_report(p: Params) -> dict:
    """Compare both closed forms at degrees 2d-2 and 2d-3 against hf_proved_k2."""
    top, nxt = top_socle_predictions(p)
    quoted = quoted_top_values(p)
    actual = (hf_proved_k2(p, 2 * p.d - 2), hf_proved_k2(p, 2 * p.d - 3))
    return {
        "degrees": (2 * p.d - 2, 2 * p.d - 3),
        "hf": actual,
        "closed_form": (top, nxt),
        "quoted": quoted,
        "closed_form_agrees": actual == (top, nxt),
        "quoted_agrees": actual == quoted,
    }
