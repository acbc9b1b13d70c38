"""Acceptance criteria, one test each; every test records a PASS/FAIL line."""

import subprocess
import sys
import time

from conftest import ACCEPTANCE_LINES

from powideal.fatpoints import fat_hf, fat_hf_table, fat_series, piecewise_k2, regularity_bound
from powideal.grading import Params, gens_count, weight_counts
from powideal.hilbert import (
    hf_conjectured, hf_proved_k2, hf_table, numerator_from_hf, series_closed_form, weight_blocks,
)
from powideal.numerics import binomial, vanishing_order_at_one
from powideal.oracle import fat_oracle, hf_oracle, initial_ideal_hf, phi_rank, socle_dims
from powideal.sweep import SweepSpec, run_sweep, summarize


def record(num: int, title: str, ok: bool, detail: str) -> None:
    line = f"criterion {num:2d} {'PASS' if ok else 'FAIL'}  {title}: {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert ok, line


def test_c01_cli_table_three_two_five():
    want = "1,4,10,20,35,48,52,40,15,0"
    start = time.perf_counter()
    res = subprocess.run([sys.executable, "-m", "powideal", "hf", "--n", "3", "--k", "2", "--d", "5"],
                         capture_output=True, text=True)
    elapsed = time.perf_counter() - start
    ok = res.returncode == 0 and res.stdout.strip() == want and elapsed < 1.0
    record(1, "hf n=3 k=2 d=5 table", ok, f"output {res.stdout.strip()!r} in {elapsed:.3f}s (limit 1s, exact)")


def test_c02_k4_worked_example():
    p = Params(2, 4, 8)
    value = hf_conjectured(p, 28)
    N = weight_counts(2, 4)
    blocks = tuple(v for _, _, v in weight_blocks(p, 28))
    ok = value == 195 and N == (1, 3, 6, 10, 12, 12, 10, 6, 3, 1) and blocks == (21, 13, 6)
    record(2, "n=2 k=4 d=8 degree 28", ok, f"HF={value}, N={N}, blocks={blocks} (exact)")


def test_c03_generator_count():
    p = Params(2, 4, 3)
    g, r = gens_count(p), phi_rank(p)
    record(3, "generators n=2 k=4 d=3", g == 16 and r == 16, f"gens_count={g}, phi_rank={r} (want 16, exact)")


def test_c04_oracle_soundness():
    start = time.perf_counter()
    bad, checked = [], 0
    for n in (1, 2, 3):
        for d in range(1, 7):
            p = Params(n, 2, d)
            for i in range(2 * d):
                checked += 1
                if hf_oracle(p, i) != hf_proved_k2(p, i):
                    bad.append((n, d, i))
    elapsed = time.perf_counter() - start
    ok = not bad and elapsed < 120
    record(4, "oracle vs proved k=2", ok, f"{checked} values, mismatches={bad[:3]}, {elapsed:.1f}s (limit 120s)")


def test_c05_conjecture_sweep():
    start = time.perf_counter()
    spec = SweepSpec(n_values=(1, 2, 3, 4), k_values=(2, 3, 4, 5), d_values=tuple(range(1, 41)),
                     methods=("conjectured", "comp", "duality"))
    summary = summarize(*run_sweep(spec))
    elapsed = time.perf_counter() - start
    ok = summary["tuples"] == 640 and summary["guarded"] == 0 and not summary["disagreements"]
    record(5, "sweep n<=4 k<=5 d<=40", ok,
           f"{summary['tuples']} tuples, {len(summary['disagreements'])} disagreements, {elapsed:.1f}s")


def test_c06_fat_point_formulas():
    branch_bad, branch_checked = [], 0
    for n in range(1, 6):
        for d in range(1, 11):
            for m in range(0, 2 * d + n + 2):
                v = piecewise_k2(n, d, m)
                if v is None:
                    continue
                branch_checked += 1
                if v != fat_hf(n, 2, d, m):
                    branch_bad.append((n, d, m))
    oracle_bad, oracle_checked = [], 0
    for k in (2, 3):
        for n in (1, 2):
            for d in (1, 2, 3):
                for m in range(k * d + k * n + 1):
                    oracle_checked += 1
                    if fat_oracle(n, k, d, m) != fat_hf(n, k, d, m):
                        oracle_bad.append((n, k, d, m))
    ok = not branch_bad and not oracle_bad
    record(6, "fat-point series vs branches and interpolation rank", ok,
           f"{branch_checked} branch values, {oracle_checked} oracle values, "
           f"mismatches={branch_bad[:3] + oracle_bad[:3]} (exact)")


def test_c07_initial_ideal():
    bad, checked = [], 0
    for n in range(1, 5):
        for k in range(2, 5):
            for d in range(1, 7):
                table = fat_hf_table(n, k, d, k * d + k * n)
                for m, v in enumerate(table):
                    checked += 1
                    if initial_ideal_hf(n, k, d, m) != v:
                        bad.append((n, k, d, m))
    record(7, "initial ideal vs fat-point series", not bad, f"{checked} values, mismatches={bad[:3]} (exact)")


def test_c08_series_closed_forms():
    bad, checked = [], 0
    for n, dmin in ((1, 1), (2, 2), (3, 3)):
        for d in range(dmin, 21):
            p = Params(n, 2, d)
            checked += 1
            if numerator_from_hf(hf_table(p)) != series_closed_form(p):
                bad.append((n, d))
    record(8, "series numerators k=2 d<=20", not bad, f"{checked} triples, mismatches={bad} (exact)")


def test_c09_multiplicity():
    bad, checked = [], 0
    for n in range(1, 5):
        for k in range(2, 5):
            for d in range(1, 7):
                checked += 1
                order, value = vanishing_order_at_one(fat_series(n, k, d).numerator)
                want = k ** n * binomial(d + n - 1, n)
                table = fat_hf_table(n, k, d, regularity_bound(n, k, d))
                if (order, value) != (n, want) or table[-1] != want:
                    bad.append((n, k, d))
    record(9, "multiplicity from series numerator", not bad, f"{checked} triples, mismatches={bad} (exact)")


def test_c10_socle_self_consistency():
    notes, ok = [], True
    for d in (2, 3):
        p = Params(2, 2, d)
        soc = socle_dims(p)
        hf = hf_table(p).values
        ok &= all(0 <= s <= h for s, h in zip(soc, hf))
        ok &= all(s == 0 for s in soc[2 * d - 1:])
        level = all(s == 0 for i, s in enumerate(soc) if i != 2 * d - 2)
        predicted = binomial(2 + d - 2, 1)
        ok &= soc[2 * d - 2] == hf[2 * d - 2]  # the top degree is all socle
        notes.append(f"d={d} socle={soc} level={level} top={soc[2 * d - 2]} (C(n+d-2,n-1)={predicted})")
    record(10, "socle oracle self-consistency k=2 n=2", ok, "; ".join(notes))
