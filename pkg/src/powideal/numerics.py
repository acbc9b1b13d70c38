"""Exact combinatorial primitives and univariate integer polynomials.

Univariate polynomials are plain tuples of Python ints, index = power of t,
with trailing zeros trimmed (the zero polynomial is the empty tuple).
"""

from __future__ import annotations

import math
import threading
from typing import Iterable, Sequence

UniPoly = tuple  # tuple[int, ...]

# rows beyond this go straight to math.comb instead of the cache
PASCAL_CACHE_ROWS = 1500

_pascal: list[list[int]] = [[1]]
_pascal_lock = threading.Lock()


def _grow_pascal(a: int) -> None:
    with _pascal_lock:
        rows = _pascal
        while len(rows) <= a:
            prev = rows[-1]
            row = [1] * (len(prev) + 1)
            for j in range(1, len(prev)):
                row[j] = prev[j - 1] + prev[j]
            rows.append(row)


def binomial(a: int, b: int) -> int:
    """C(a, b), with 0 whenever b < 0, a < 0 or b > a."""
    if b < 0 or a < 0 or b > a:
        return 0
    if a >= PASCAL_CACHE_ROWS:
        return math.comb(a, b)
    if a >= len(_pascal):
        _grow_pascal(a)
    return _pascal[a][b]


def multinomial(total: int, parts: Sequence[int]) -> int:
    """Multinomial coefficient total! / prod(p!), or 0 if the parts are not a
    composition of ``total``."""
    if any(p < 0 for p in parts) or sum(parts) != total:
        return 0
    out = 1
    left = total
    for p in parts:
        out *= binomial(left, p)
        left -= p
    return out


def trim(coeffs: Iterable[int]) -> UniPoly:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def poly_add(p: UniPoly, q: UniPoly) -> UniPoly:
    if len(p) < len(q):
        p, q = q, p
    out = list(p)
    for i, c in enumerate(q):
        out[i] += c
    return trim(out)


def poly_sub(p: UniPoly, q: UniPoly) -> UniPoly:
    return poly_add(p, tuple(-c for c in q))


def poly_mul(p: UniPoly, q: UniPoly) -> UniPoly:
    if not p or not q:
        return ()
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return trim(out)


def poly_shift(p: UniPoly, m: int) -> UniPoly:
    """Multiply by t^m (m >= 0)."""
    if not p:
        return ()
    return (0,) * m + tuple(p)


def poly_pow(p: UniPoly, e: int) -> UniPoly:
    out: UniPoly = (1,)
    for _ in range(e):
        out = poly_mul(out, p)
    return out


def poly_truncate(p: UniPoly, degree: int) -> UniPoly:
    """Drop every term of degree > ``degree``."""
    return trim(p[: degree + 1])


def poly_eval(p: UniPoly, t) -> int:
    acc = 0
    for c in reversed(p):
        acc = acc * t + c
    return acc


def poly_divmod_linear(p: UniPoly, root: int) -> tuple[UniPoly, int]:
    """Synthetic division of p by (t - root); returns (quotient, remainder)."""
    if not p:
        return (), 0
    q = [0] * (len(p) - 1)
    acc = 0
    for i in range(len(p) - 1, -1, -1):
        acc = acc * root + p[i]
        if i:
            q[i - 1] = acc
    return trim(q), acc


def one_minus_t_power(e: int) -> UniPoly:
    """(1 - t)^e expanded."""
    return tuple((-1) ** i * binomial(e, i) for i in range(e + 1))


def expand_series(numerator: UniPoly, denom_exponent: int, up_to: int) -> list[int]:
    """Coefficients of numerator / (1 - t)^denom_exponent for degrees 0..up_to."""
    if denom_exponent < 1:
        raise ValueError("denom_exponent must be >= 1")
    e = denom_exponent - 1
    out = []
    for i in range(up_to + 1):
        acc = 0
        for j, c in enumerate(numerator[: i + 1]):
            if c:
                acc += c * binomial(e + i - j, e)
        out.append(acc)
    return out


def numerator_of(values: Sequence[int], denom_exponent: int) -> UniPoly:
    """(1 - t)^denom_exponent * sum(values[i] t^i), exactly."""
    return poly_mul(one_minus_t_power(denom_exponent), trim(values))


def vanishing_order_at_one(p: UniPoly) -> tuple[int, int]:
    """Return (r, v): p = (1 - t)^r * q with q(1) = v != 0.

    For the zero polynomial this is undefined and raises ValueError.
    """
    if not p:
        raise ValueError("zero polynomial has infinite order at t=1")
    r = 0
    q = p
    while True:
        quot, rem = poly_divmod_linear(q, 1)
        if rem != 0:
            return r, rem
        # p = (t - 1) quot = (1 - t) (-quot)
        q = tuple(-c for c in quot)
        r += 1
