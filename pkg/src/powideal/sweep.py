"""Parameter sweeps comparing Hilbert-function engines."""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Optional

from .cache import ResultCache, VerificationRecord
from .grading import Params
from .hilbert import METHODS, ORACLE, PROVED_K2, SERIES, hf_value, series_closed_form
from .oracle import DEFAULT_MAX_BLOCK_ENTRIES, ResourceGuardError, hf_oracle


@dataclass
class SweepSpec:
    n_values: tuple
    k_values: tuple
    d_values: tuple
    methods: tuple
    degrees: Optional[tuple] = None  # None = all of 0..kd-1, else inclusive (lo, hi)
    jobs: int = 1
    cache_path: Optional[str] = None
    max_block_entries: Optional[int] = DEFAULT_MAX_BLOCK_ENTRIES
    skip_guarded: bool = False

    def __post_init__(self):
        for name in ("n_values", "k_values", "d_values", "methods"):
            if not getattr(self, name):
                raise ValueError(f"{name} must be nonempty")
        bad = set(self.methods) - set(METHODS)
        if bad:
            raise ValueError(f"unknown methods: {sorted(bad)}")
        # validates every triple up front
        for n, k, d in self.tuples():
            Params(n, k, d)

    def tuples(self):
        return sorted(itertools.product(self.n_values, self.k_values, self.d_values))

    def degree_range(self, p: Params) -> range:
        if self.degrees is None:
            return range(p.top)
        lo, hi = self.degrees
        return range(lo, hi + 1)


def applicable(method: str, p: Params) -> bool:
    if method == PROVED_K2:
        return p.k == 2
    if method == SERIES:
        try:
            series_closed_form(p)
        except ValueError:
            return False
    return True


@dataclass
class TupleOutcome:
    params: tuple
    status: str  # computed / cached / guarded
    values: dict = field(default_factory=dict)  # method -> {degree: int}
    guarded_methods: tuple = ()
    disagreements: list = field(default_factory=list)


def _compute(job):
    (n, k, d), methods, degrees, limit = job
    p = Params(n, k, d)
    values, guarded = {}, []
    for m in methods:
        try:
            if m == ORACLE:
                values[m] = {i: hf_oracle(p, i, max_block_entries=limit) for i in degrees}
            elif m == SERIES:
                expanded = series_closed_form(p).expand(max(degrees, default=0))
                values[m] = {i: expanded[i] for i in degrees}
            else:
                values[m] = {i: hf_value(p, i, m) for i in degrees}
        except ResourceGuardError as exc:
            guarded.append((m, str(exc)))
    return (n, k, d), values, guarded


def _disagreements(values: dict) -> list:
    out = []
    methods = sorted(values)
    if len(methods) < 2:
        return out
    degrees = sorted(set().union(*(values[m].keys() for m in methods)))
    for i in degrees:
        seen = {m: values[m][i] for m in methods if i in values[m]}
        if len(set(seen.values())) > 1:
            out.append((i, seen))
    return out


def _agrees_with(values: dict, method: str, degree: int) -> list:
    v = values[method][degree]
    return sorted(m for m in values if m != method and values[m].get(degree) == v)


class GuardRefusal(Exception):
    def __init__(self, params, detail):
        super().__init__(f"n={params[0]} k={params[1]} d={params[2]}: {detail}")
        self.params = params


def run_sweep(spec: SweepSpec):
    """Run every tuple; returns (outcomes sorted by tuple, records written)."""
    cache = ResultCache(spec.cache_path)
    outcomes = {}
    jobs = []
    for n, k, d in spec.tuples():
        p = Params(n, k, d)
        methods = tuple(m for m in spec.methods if applicable(m, p))
        degrees = tuple(spec.degree_range(p))
        keys = [(n, k, d, i, m) for m in methods for i in degrees]
        if keys and all(key in cache for key in keys):
            vals = {m: {i: cache.get((n, k, d, i, m)).int_value for i in degrees} for m in methods}
            outcomes[(n, k, d)] = TupleOutcome((n, k, d), "cached", vals)
        else:
            jobs.append(((n, k, d), methods, degrees, spec.max_block_entries))

    if spec.jobs > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=spec.jobs) as pool:
            results = list(pool.map(_compute, jobs, chunksize=max(1, len(jobs) // (4 * spec.jobs))))
    else:
        results = [_compute(j) for j in jobs]

    new_records = []
    for params, vals, guarded in sorted(results, key=lambda r: r[0]):
        if guarded and not spec.skip_guarded:
            raise GuardRefusal(params, guarded[0][1])
        status = "guarded" if guarded else "computed"
        outcomes[params] = TupleOutcome(params, status, vals, tuple(m for m, _ in guarded))
        for m in sorted(vals):
            for i in sorted(vals[m]):
                new_records.append(VerificationRecord(
                    *params, degree=i, method=m, value=str(vals[m][i]),
                    agrees_with=_agrees_with(vals, m, i)))
    written = cache.append(new_records)

    ordered = [outcomes[t] for t in sorted(outcomes)]
    for o in ordered:
        o.disagreements = _disagreements(o.values)
    return ordered, written


def summarize(outcomes, written: int) -> dict:
    counts = {"computed": 0, "cached": 0, "guarded": 0}
    for o in outcomes:
        counts[o.status] += 1
    disagreements = []
    for o in outcomes:
        for degree, seen in o.disagreements:
            n, k, d = o.params
            disagreements.append({
                "n": n, "k": k, "d": d, "degree": degree,
                "values": {m: str(v) for m, v in sorted(seen.items())},
            })
    return {
        "tuples": len(outcomes),
        **counts,
        "records_written": written,
        "disagreements": disagreements,
    }


def reproducer(dis: dict) -> list:
    """One single-value command per disagreeing method."""
    return [f"powideal hf --n {dis['n']} --k {dis['k']} --d {dis['d']} --degree {dis['degree']} --method {m}"
            for m in dis["values"]]
