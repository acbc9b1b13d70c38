import json
import subprocess
import sys

import pytest

from powideal.cache import CACHE_ENV, ResultCache, VerificationRecord, resolve_cache_path
from powideal.cli import main
from powideal.sweep import SweepSpec, reproducer, run_sweep, summarize


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out.strip(), err


def test_hf_text(capsys):
    code, out, _ = run(capsys, "hf", "--n", "3", "--k", "2", "--d", "5")
    assert (code, out) == (0, "1,4,10,20,35,48,52,40,15,0")


def test_hf_degree_conjectural_note(capsys):
    code, out, err = run(capsys, "hf", "--n", "2", "--k", "4", "--d", "8", "--degree", "28")
    assert (code, out) == (0, "195")
    assert "conjectural" in err


def test_hf_json(capsys):
    code, out, _ = run(capsys, "hf", "--n", "0", "--k", "2", "--d", "1", "--format", "json")
    doc = json.loads(out)
    assert code == 0
    assert doc == {"params": {"n": 0, "k": 2, "d": 1}, "method": "proved-k2", "values": ["1", "0"], "conjectural": False}
    code, out, _ = run(capsys, "hf", "--n", "2", "--k", "3", "--d", "2", "--format", "json")
    assert json.loads(out)["conjectural"] is True


def test_hf_csv(capsys):
    code, out, _ = run(capsys, "hf", "--n", "1", "--k", "2", "--d", "2", "--format", "csv")
    lines = out.splitlines()
    assert lines[0] == "n,k,d,degree,method,value"
    assert lines[1:] == ["1,2,2,0,proved-k2,1", "1,2,2,1,proved-k2,2", "1,2,2,2,proved-k2,1", "1,2,2,3,proved-k2,0"]


@pytest.mark.parametrize("argv", [
    ["hf", "--n", "2", "--k", "1", "--d", "2"],
    ["hf", "--n", "2", "--k", "2", "--d", "0"],
    ["hf", "--n", "2", "--k", "3", "--d", "2", "--method", "proved-k2"],
    ["hf", "--n", "2", "--k", "2", "--d", "2", "--degree", "-1"],
    ["verify", "--n", "1", "--k", "2", "--d", "x"],
    ["verify", "--n", "1", "--k", "2", "--d", "2", "--methods", "bogus"],
    ["betti", "--n", "0", "--k", "2", "--d", "2"],
])
def test_usage_errors(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_argparse_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["hf", "--n", "2"])
    assert exc.value.code == 2


def test_guard_exit_3(capsys):
    code, _, err = run(capsys, "hf", "--n", "3", "--k", "3", "--d", "6", "--method", "oracle", "--max-block-entries", "10")
    assert code == 3 and "guard" in err
    code, _, _ = run(capsys, "fatpoints", "--n", "2", "--k", "3", "--d", "3", "--degree", "12", "--oracle", "--max-block-entries", "10")
    assert code == 3


def test_series(capsys):
    code, out, _ = run(capsys, "series", "--n", "1", "--k", "2", "--d", "3")
    assert code == 0 and out.splitlines()[0] == "numerator: 1,0,0,-2,0,0,1"
    code, out, _ = run(capsys, "series", "--n", "2", "--k", "3", "--d", "2")
    assert code == 4
    code, out, _ = run(capsys, "series", "--n", "2", "--k", "3", "--d", "2", "--from-hf", "--format", "json")
    assert code == 0 and json.loads(out)["denom_exponent"] == 3
    assert run(capsys, "hf", "--n", "2", "--k", "3", "--d", "2", "--method", "series")[0] == 4


def test_betti_gens(capsys):
    assert run(capsys, "betti", "--n", "2", "--k", "2", "--d", "2")[1] == "beta=[3,2] shifts=[4,6]"
    assert run(capsys, "gens", "--n", "2", "--k", "4", "--d", "3")[1] == "16"
    doc = json.loads(run(capsys, "betti", "--n", "2", "--k", "2", "--d", "2", "--format", "json")[1])
    assert doc["betti"][1] == {"i": 2, "shift": 6, "value": "2"}


def test_fatpoints(capsys):
    assert run(capsys, "fatpoints", "--n", "2", "--k", "2", "--d", "1", "--degree", "2")[1] == "4"
    assert run(capsys, "fatpoints", "--n", "2", "--k", "3", "--d", "1", "--degree", "3", "--oracle")[1] == "8"
    assert run(capsys, "fatpoints", "--n", "2", "--k", "2", "--d", "2")[1] == "1,3,6,10,12,12,12"
    gens = run(capsys, "fatpoints", "--n", "2", "--k", "2", "--d", "2", "--gens")[1].splitlines()
    assert len(gens) == 3


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "powideal", "gens", "--n", "3", "--k", "2", "--d", "2"],
                         capture_output=True, text=True, check=True)
    assert res.stdout.strip() == "7"


def test_record_json_round_trip():
    rec = VerificationRecord(2, 3, 4, 5, "comp", str(10 ** 30), agrees_with=["duality"])
    back = VerificationRecord.from_dict(json.loads(rec.to_json()))
    assert back == rec and back.int_value == 10 ** 30


def test_resolve_cache_path(monkeypatch, tmp_path):
    monkeypatch.setenv(CACHE_ENV, str(tmp_path / "env.jsonl"))
    assert resolve_cache_path(None) == tmp_path / "env.jsonl"
    assert resolve_cache_path(str(tmp_path / "flag.jsonl")) == tmp_path / "flag.jsonl"
    monkeypatch.delenv(CACHE_ENV)
    assert resolve_cache_path(None) is None


def test_cache_truncates_corrupt_tail(tmp_path, caplog):
    path = tmp_path / "c.jsonl"
    rec = VerificationRecord(1, 2, 3, 0, "comp", "1")
    path.write_text(rec.to_json() + "\n" + '{"n": 1, "k": 2, "d"')
    cache = ResultCache(path)
    assert len(cache) == 1
    assert path.read_text() == rec.to_json() + "\n"
    assert "truncating" in caplog.text


def test_cache_rejects_corrupt_middle(tmp_path):
    path = tmp_path / "c.jsonl"
    rec = VerificationRecord(1, 2, 3, 0, "comp", "1")
    path.write_text(rec.to_json() + "\nnot json\n" + rec.to_json() + "\n")
    with pytest.raises(ValueError):
        ResultCache(path)


def test_cache_append_skips_duplicates(tmp_path):
    cache = ResultCache(tmp_path / "c.jsonl")
    rec = VerificationRecord(1, 2, 3, 0, "comp", "1")
    assert cache.append([rec, rec]) == 1
    assert cache.append([rec]) == 0
    assert len((tmp_path / "c.jsonl").read_text().splitlines()) == 1


def test_verify_idempotent_with_cache(capsys, tmp_path):
    cache = str(tmp_path / "v.jsonl")
    argv = ["verify", "--n", "1:2", "--k", "3:4", "--d", "1:10", "--cache", cache, "--format", "json"]
    code, out, _ = run(capsys, *argv)
    first = json.loads(out)
    assert code == 0 and first["computed"] == 40 and first["disagreements"] == []
    size = len(open(cache).read())
    code, out, _ = run(capsys, *argv)
    second = json.loads(out)
    assert code == 0 and second["cached"] == 40 and second["records_written"] == 0
    assert len(open(cache).read()) == size


def test_verify_env_cache(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv(CACHE_ENV, str(tmp_path / "env.jsonl"))
    assert run(capsys, "verify", "--n", "1", "--k", "2", "--d", "1:3")[0] == 0
    assert (tmp_path / "env.jsonl").exists()


def test_verify_oracle_k2(capsys):
    code, out, _ = run(capsys, "verify", "--n", "1:3", "--k", "2", "--d", "1:4", "--methods", "proved-k2,oracle,series")
    assert code == 0 and out.splitlines()[-1].endswith("disagreements=0")


def test_verify_guarded(capsys):
    argv = ["verify", "--n", "3", "--k", "3", "--d", "6", "--methods", "conjectured,oracle", "--max-block-entries", "10"]
    assert run(capsys, *argv)[0] == 3
    code, out, _ = run(capsys, *argv, "--skip-guarded", "--format", "json")
    assert code == 0 and json.loads(out)["guarded"] == 1


def test_verify_reports_disagreement(capsys, tmp_path):
    # a poisoned cache entry stands in for a wrong engine
    cache = tmp_path / "bad.jsonl"
    recs = [VerificationRecord(1, 2, 2, i, m, str(v)) for m in ("conjectured", "comp")
            for i, v in enumerate((1, 2, 1, 0))]
    recs[5] = VerificationRecord(1, 2, 2, 1, "comp", "3")
    cache.write_text("".join(r.to_json() + "\n" for r in recs))
    code, _, err = run(capsys, "verify", "--n", "1", "--k", "2", "--d", "2", "--methods", "conjectured,comp",
                       "--cache", str(cache))
    assert code == 1
    assert "powideal hf --n 1 --k 2 --d 2 --degree 1 --method comp" in err


def test_parallel_matches_serial():
    kw = dict(n_values=(1, 2, 3), k_values=(2, 3), d_values=tuple(range(1, 7)),
              methods=("conjectured", "comp", "duality"))
    serial = summarize(*run_sweep(SweepSpec(**kw)))
    parallel = summarize(*run_sweep(SweepSpec(**kw, jobs=2)))
    assert serial == parallel
    assert serial["tuples"] == 36 and serial["disagreements"] == []


def test_reproducer_lines():
    dis = {"n": 1, "k": 3, "d": 2, "degree": 4, "values": {"comp": "1", "duality": "2"}}
    assert reproducer(dis) == [
        "powideal hf --n 1 --k 3 --d 2 --degree 4 --method comp",
        "powideal hf --n 1 --k 3 --d 2 --degree 4 --method duality",
    ]
