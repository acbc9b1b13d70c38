"""Exact Gaussian elimination on sparse rows.

Rows are dicts {column: value}; values are Fractions, ints or CycNumbers.
Pivoting takes the first row with a nonzero entry in the current column.
"""

from __future__ import annotations

from fractions import Fraction

DEFAULT_MAX_BLOCK_ENTRIES = 20_000


class ResourceGuardError(RuntimeError):
    """A matrix block exceeded the configured entry bound."""

    def __init__(self, rows: int, cols: int, limit: int, what: str = "block"):
        super().__init__(f"{what} of size {rows}x{cols} = {rows * cols} entries exceeds limit {limit}")
        self.rows = rows
        self.cols = cols
        self.limit = limit


def guard(rows: int, cols: int, limit: int | None, what: str = "block") -> None:
    if limit is not None and rows * cols > limit:
        raise ResourceGuardError(rows, cols, limit, what)


def _as_field(v):
    return Fraction(v) if isinstance(v, int) else v


def echelon(rows, columns=None):
    """Row-reduce a list of sparse rows.

    Returns (pivots, reduced) where ``reduced`` maps each pivot column to a row
    normalized to 1 at the pivot and cleared in every other pivot column.
    ``columns`` fixes the column order (default: sorted keys).
    """
    work = [{c: _as_field(v) for c, v in r.items() if v} for r in rows]
    work = [r for r in work if r]
    if columns is None:
        columns = sorted({c for r in work for c in r})
    reduced = {}
    pivots = []
    for col in columns:
        pi = next((idx for idx, r in enumerate(work) if col in r), None)
        if pi is None:
            continue
        prow = work.pop(pi)
        inv = 1 / prow[col]
        prow = {c: v * inv for c, v in prow.items()}
        for idx, r in enumerate(work):
            f = r.get(col)
            if f is not None:
                _axpy(r, prow, f)
        for r in reduced.values():
            f = r.get(col)
            if f is not None:
                _axpy(r, prow, f)
        reduced[col] = prow
        pivots.append(col)
        work = [r for r in work if r]
        if not work:
            break
    return pivots, reduced


def _axpy(r: dict, prow: dict, f) -> None:
    # r -= f * prow, dropping zeros
    for c, v in prow.items():
        nv = r.get(c)
        nv = -(f * v) if nv is None else nv - f * v
        if nv:
            r[c] = nv
        else:
            r.pop(c, None)


def rank(rows) -> int:
    """Rank of a list of sparse rows (forward elimination only)."""
    work = [{c: _as_field(v) for c, v in r.items() if v} for r in rows]
    work = [r for r in work if r]
    rk = 0
    while work:
        # column order: smallest column present
        col = min(min(r) for r in work)
        pi = next(idx for idx, r in enumerate(work) if col in r)
        prow = work.pop(pi)
        inv = 1 / prow[col]
        rk += 1
        nxt = []
        for r in work:
            f = r.get(col)
            if f is not None:
                _axpy(r, prow, f * inv)
            if r:
                nxt.append(r)
        work = nxt
    return rk


def dense_rank(matrix) -> int:
    return rank([{j: v for j, v in enumerate(row) if v} for row in matrix])


def reduce_vector(vec: dict, reduced: dict) -> dict:
    """Normal form of ``vec`` modulo an echelon basis from :func:`echelon`."""
    out = {c: _as_field(v) for c, v in vec.items() if v}
    for col, prow in reduced.items():
        f = out.get(col)
        if f is not None:
            _axpy(out, prow, f)
    return out
