import json

import pytest

import qsympat.checks as checklib
from qsympat.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_avoiders_text(capsys):
    code, out, err = run_cli(capsys, "avoiders", "-n", "3", "-p", "132,312")
    assert code == 0
    assert out.splitlines() == ["123", "213", "231", "321"]
    assert "count 4" in err


def test_avoiders_count_and_empty_grade(capsys):
    code, out, _ = run_cli(capsys, "avoiders", "-n", "5", "-p", "123,321", "--count")
    assert code == 0 and out.strip() == "0"
    code, out, _ = run_cli(capsys, "avoiders", "-n", "0", "-p", "132")
    assert code == 0 and out.strip() == "()"


def test_avoiders_json_round_trip(capsys):
    code, out, _ = run_cli(capsys, "avoiders", "-n", "3", "-p", "132,312", "--json")
    blob = json.loads(out)
    assert blob["count"] == 4 and blob["members"][0] == "123"
    assert json.dumps(json.loads(out), sort_keys=True) == out.strip()


def test_qsym_schur(capsys):
    code, out, _ = run_cli(capsys, "qsym", "-n", "4", "-p", "132,213", "--schur")
    assert code == 0
    assert "s[4] + s[3,1] + s[2,1,1] + s[1,1,1,1]" in out
    code, out, _ = run_cli(capsys, "qsym", "-n", "3", "-p", "132,231", "--schur")
    assert code == 0 and "NOT SYMMETRIC" in out


def test_qsym_mass_of_empty_patterns(capsys):
    code, out, _ = run_cli(capsys, "qsym", "-n", "3", "-p", "", "--json")
    blob = json.loads(out)
    assert sum(t["coeff"] for t in blob["qsym"]["terms"]) == 6


def test_qsym_tsv(capsys):
    code, out, _ = run_cli(capsys, "qsym", "-n", "4", "-p", "132,213", "--schur", "--tsv")
    lines = out.strip().splitlines()
    assert lines[0].split("\t") == ["4", "1"]


def test_rsk(capsys):
    code, out, _ = run_cli(capsys, "rsk", "312")
    assert code == 0 and out.splitlines() == ["P = 12/3", "Q = 13/2"]
    code, out, _ = run_cli(capsys, "rsk", "--inverse", "12/3", "13/2")
    assert out.strip() == "312"


def test_knuth(capsys):
    code, out, _ = run_cli(capsys, "knuth", "--class", "12/3")
    assert out.splitlines() == ["132", "312"]
    code, out, _ = run_cli(capsys, "knuth", "--closed", "12/3")
    assert out.strip() == "CLOSED (superstandard hook)"
    code, out, _ = run_cli(capsys, "knuth", "--closed", "12/34")
    assert out.strip() == "NOT CLOSED"
    code, out, _ = run_cli(capsys, "knuth", "--neighbors", "132")
    assert out.strip() == "312"


def test_usage_errors_exit_two(capsys):
    for argv in (
        ["avoiders", "-n", "3", "-p", "1x2"],
        ["avoiders", "-n", "13", "-p", "12"],
        ["verify", "bogus"],
        ["rsk", "--inverse", "12/3", "123"],
        ["knuth", "--class", "12/3", "--closed", "12/3"],
        ["rsk"],
    ):
        with pytest.raises(SystemExit) as exc:
            main(argv)
        assert exc.value.code == 2
        capsys.readouterr()


def test_safety_cap_override(capsys):
    code, out, _ = run_cli(capsys, "avoiders", "-n", "13", "-p", "12", "--count", "--unsafe-n")
    assert code == 0 and out.strip() == "1"


def test_verify_single_check(capsys):
    code, out, err = run_cli(capsys, "verify", "table-s3", "--n-max", "4")
    assert code == 0
    blob = json.loads(out.strip().splitlines()[0])
    assert blob["check_id"] == "table-s3" and blob["status"] == "pass"
    assert "[pass]" in err


def test_verify_conjecture_exit_zero(capsys):
    code, out, _ = run_cli(capsys, "verify", "partial-shuffle", "-j", "5", "--n-max", "5")
    assert code == 0
    assert json.loads(out.strip())["status"] == "conjecture-consistent"


def test_verify_manifest_and_out(tmp_path, capsys):
    manifest = tmp_path / "manifest.json"
    manifest.write_text(
        json.dumps(
            [
                {"check_id": "fine-characters", "parameters": {"size_max": 3}},
                {"check_id": "partial-shuffle", "parameters": {"j": 3, "n_max": 4}},
            ]
        )
    )
    out_path = tmp_path / "results.jsonl"
    code, out, _ = run_cli(
        capsys, "verify", "all", "--manifest", str(manifest), "--out", str(out_path)
    )
    assert code == 0
    lines = out_path.read_text().strip().splitlines()
    assert len(lines) == 2
    assert {json.loads(l)["status"] for l in lines} == {"pass"}


def test_verify_failure_exit_code(capsys, monkeypatch):
    def fake(**kwargs):
        return checklib.CheckResult("table-s3", kwargs, checklib.FAIL, {"n": 3})

    monkeypatch.setitem(checklib._CHECK_FUNCS, "table-s3", fake)
    code, out, _ = run_cli(capsys, "verify", "table-s3", "--n-max", "3")
    assert code == 1
    assert json.loads(out.strip())["status"] == "fail"


def test_cache_dir_env(tmp_path, capsys, monkeypatch):
    import qsympat.qsym as qq

    monkeypatch.setenv("QSYMPAT_CACHE", str(tmp_path))
    qq._stats_memo.pop(4, None)
    try:
        run_cli(capsys, "qsym", "-n", "4", "-p", "132,213", "--schur")
        assert (tmp_path / "syt-descents-n4.json").is_file()
    finally:
        qq.set_statistics_cache_dir(None)
        qq._stats_memo.pop(4, None)


def test_report_command(tmp_path, capsys):
    code, out, _ = run_cli(
        capsys,
        "report",
        "-p",
        "132,312",
        "--n-min",
        "2",
        "--n-max",
        "5",
        "--out-dir",
        str(tmp_path / "rep"),
    )
    assert code == 0
    tsv = (tmp_path / "rep" / "report.tsv").read_text().splitlines()
    assert tsv[0].startswith("n\tcount")
    assert len(tsv) == 5
    assert (tmp_path / "rep" / "counts.png").stat().st_size > 0
    assert (tmp_path / "rep" / "coefficients.png").stat().st_size > 0
