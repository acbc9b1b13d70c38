"""Socle dimensions of R_{n,2,d}, block by block.

For each degree i and multicyclic degree h, R_{i,h} is modelled by the
monomials of S_{i,h} that are not pivots of the reduced echelon basis of
I_{i,h}.  An element v is in the socle when every x_l v lies in I_{i+1}.
"""

from __future__ import annotations

import itertools

from ..grading import Params
from .linalg import DEFAULT_MAX_BLOCK_ENTRIES, echelon, guard, rank, reduce_vector
from .power import _block_rows, graded_monomials


def _ideal_basis(p: Params, i: int, h: tuple, limit):
    target = graded_monomials(p.n + 1, p.k, i, h)
    index = {e: t for t, e in enumerate(target)}
    j = i - p.D
    if j < 0 or not target:
        return target, index, {}
    rows = _block_rows(p, j, h, index)
    guard(len(rows), len(target), limit)
    _, reduced = echelon(rows, columns=range(len(target)))
    return target, index, reduced


def socle_dims(p: Params, max_block_entries=DEFAULT_MAX_BLOCK_ENTRIES) -> list:
    """dim Soc(R)_i for i = 0..2d-1 (k = 2)."""
    if p.k != 2:
        raise ValueError("socle computation is implemented for k = 2")
    nv, k = p.n + 1, p.k
    blocks = {}

    def basis(i, h):
        key = (i, h)
        if key not in blocks:
            blocks[key] = _ideal_basis(p, i, h, max_block_entries)
        return blocks[key]

    out = []
    for i in range(p.top):
        total = 0
        for h in itertools.product(range(k), repeat=nv):
            target, _, reduced = basis(i, h)
            free = [t for t in range(len(target)) if t not in reduced]
            if not free:
                continue
            rows = []
            for t in free:
                mono = target[t]
                row = {}
                for var in range(nv):
                    h2 = tuple((x + (v == var)) % k for v, x in enumerate(h))
                    target2, index2, reduced2 = basis(i + 1, h2)
                    up = list(mono)
                    up[var] += 1
                    nf = reduce_vector({index2[tuple(up)]: 1}, reduced2)
                    for col, val in nf.items():
                        row[(var, col)] = val
                rows.append(row)
            total += len(free) - rank(rows)
        out.append(total)
    return out


def quotient_dims(p: Params, max_block_entries=DEFAULT_MAX_BLOCK_ENTRIES) -> list:
    """HF(R; i) for i = 0..kd-1 from the same echelon model (consistency check)."""
    out = []
    for i in range(p.top):
        total = 0
        for h in itertools.product(range(p.k), repeat=p.n + 1):
            target, _, reduced = _ideal_basis(p, i, h, max_block_entries)
            total += len(target) - len(reduced)
        out.append(total)
    return out
