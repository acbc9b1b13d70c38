"""Brute-force linear algebra for the power ideal I_{n,k,d}.

The generators psi_g are the multicyclic components of (x_0 + ... + x_n)^D.
In degree i = D + j and multicyclic degree h, the ideal is spanned by the
products m * psi_g with m a monomial of S_{j, h-g}; its dimension is the
rank of that integer matrix.
"""

from __future__ import annotations

import functools
import itertools

from ..grading import Multicycle, Params, all_multicycles, in_G
from ..numerics import binomial, multinomial
from ..polys import SparseIntPoly, compositions
from .cyclotomic import CycField
from .linalg import DEFAULT_MAX_BLOCK_ENTRIES, guard, rank


def graded_monomials(nvars: int, k: int, i: int, g: tuple) -> list:
    """Exponents of the monomials in S_{i,g}, in graded-lex order."""
    r = i - sum(g)
    if r < 0 or r % k:
        return []
    return [tuple(gi + k * b for gi, b in zip(g, bs)) for bs in compositions(r // k, nvars)]


@functools.lru_cache(maxsize=4096)
def _psi_terms(n: int, k: int, D: int, g: tuple) -> tuple:
    return tuple((a, multinomial(D, a)) for a in graded_monomials(n + 1, k, D, g))


def psi_gen(p: Params, g: Multicycle) -> SparseIntPoly:
    """The component of (x_0 + ... + x_n)^D in multicyclic degree g."""
    return SparseIntPoly(p.n + 1, dict(_psi_terms(p.n, p.k, p.D, tuple(g.entries))))


def psi_family(p: Params) -> dict:
    """psi_g for every g in G_{k,n,D}, keyed by the entry tuple."""
    out = {}
    for g in all_multicycles(p.n + 1, p.k):
        if in_G(p, p.D, g):
            out[g.entries] = psi_gen(p, g)
    return out


def phi_gen(p: Params, g: Multicycle) -> list:
    """phi_g = (sum_i xi^{g_i} x_i)^D written in the psi basis.

    Returns [(h, xi^{<g,h>}), ...] over h in G_{k,n,D}, lexicographic in h.
    """
    F = CycField(p.k)
    out = []
    for h in all_multicycles(p.n + 1, p.k):
        if in_G(p, p.D, h):
            out.append((h, F.root_power(g.dot(h))))
    return out


def phi_poly(p: Params, g: Multicycle) -> dict:
    """Direct expansion of (sum_i xi^{g_i} x_i)^D as {exponent: CycNumber}."""
    F = CycField(p.k)
    out = {}
    for a in compositions(p.D, p.n + 1):
        out[a] = F.root_power(sum(x * y for x, y in zip(g.entries, a))) * multinomial(p.D, a)
    return out


def psi_from_phi(p: Params, m: Multicycle) -> dict:
    """Apply the inverse transform k^{-n-1} sum_h xi^{-<m,h>} phi_h.

    Result is {h: coefficient} on the psi basis; it should be the indicator
    of m when m is in G_{k,n,D} and zero otherwise.
    """
    F = CycField(p.k)
    acc: dict = {}
    for h in all_multicycles(p.n + 1, p.k):
        w = F.root_power(-m.dot(h))
        for target, c in phi_gen(p, h):
            key = target.entries
            acc[key] = acc.get(key, F.zero) + w * c
    scale = F.from_int(p.k ** (p.n + 1)).inverse()
    return {key: v * scale for key, v in acc.items() if v}


def _block_rows(p: Params, j: int, h: tuple, target_index: dict):
    k, nv = p.k, p.n + 1
    rows = []
    for g in itertools.product(range(k), repeat=nv):
        terms = _psi_terms(p.n, k, p.D, g)
        if not terms:
            continue
        diff = tuple((a - b) % k for a, b in zip(h, g))
        for m in graded_monomials(nv, k, j, diff):
            row = {}
            for a, c in terms:
                e = tuple(x + y for x, y in zip(m, a))
                row[target_index[e]] = c
            rows.append(row)
    return rows


def ideal_block_rank(p: Params, i: int, h: tuple, max_block_entries=DEFAULT_MAX_BLOCK_ENTRIES) -> tuple:
    """(dim S_{i,h}, dim I_{i,h}) from the multiplication map into S_{i,h}."""
    target = graded_monomials(p.n + 1, p.k, i, h)
    j = i - p.D
    if not target or j < 0:
        return len(target), 0
    index = {e: t for t, e in enumerate(target)}
    n_sources = sum(len(graded_monomials(p.n + 1, p.k, j, tuple((a - b) % p.k for a, b in zip(h, g))))
                    for g in itertools.product(range(p.k), repeat=p.n + 1)
                    if _psi_terms(p.n, p.k, p.D, g))
    guard(n_sources, len(target), max_block_entries)
    return len(target), rank(_block_rows(p, j, h, index))


def hf_oracle(p: Params, i: int, max_block_entries=DEFAULT_MAX_BLOCK_ENTRIES) -> int:
    """HF(R; i) as sum over multicyclic blocks of dim S_{i,h} - rank."""
    if i < 0:
        raise ValueError("degree must be nonnegative")
    if i < p.D:
        return binomial(p.n + i, p.n)
    total = 0
    for h in itertools.product(range(p.k), repeat=p.n + 1):
        dim_s, dim_i = ideal_block_rank(p, i, h, max_block_entries)
        total += dim_s - dim_i
    return total


def phi_matrix(p: Params) -> list:
    """Coefficient rows of the k^n generators phi_g, g in 0 x Z_k^n."""
    F = CycField(p.k)
    monos = list(compositions(p.D, p.n + 1))
    rows = []
    for tail in itertools.product(range(p.k), repeat=p.n):
        g = (0,) + tail
        row = {}
        for col, a in enumerate(monos):
            e = sum(x * y for x, y in zip(g, a))
            row[col] = F.root_power(e) * multinomial(p.D, a)
        rows.append(row)
    return rows


def phi_rank(p: Params, max_block_entries=DEFAULT_MAX_BLOCK_ENTRIES) -> int:
    """Rank over Q(xi) of the original generators (x_0 + xi^{g_1} x_1 + ...)^D."""
    guard(p.k ** p.n, binomial(p.D + p.n, p.n), max_block_entries, "generator matrix")
    return rank(phi_matrix(p))

