import json
import subprocess
import sys

import pytest

from nonconsec.cli import dumps, main


def run(capsys, *argv):
    status = main(list(argv))
    out, err = capsys.readouterr()
    return status, out, err


@pytest.mark.parametrize(
    "argv, expected",
    [
        (["count", "--pattern", "321", "--n", "7", "--method", "recurrence"], "607"),
        (["count", "--pattern", "321", "--n", "7", "--method", "gf"], "607"),
        (["count", "--pattern", "321", "--n", "7", "--method", "oracle"], "607"),
        (["count", "--pattern", "132", "--n", "0", "--method", "formula"], "1"),
        (["count", "--pattern", "132", "--n", "8", "--method", "gf"], "2306"),
        (["count", "--pattern", "21", "--n", "6", "--method", "oracle"], "13"),
        (["count", "--pattern", "21", "--n", "6", "--method", "recurrence"], "13"),
    ],
)
def test_count(capsys, argv, expected):
    status, out, _ = run(capsys, *argv)
    assert status == 0
    assert out.strip() == expected


def test_count_321_formula_is_a_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["count", "--pattern", "321", "--n", "5", "--method", "formula"])
    assert exc.value.code == 2


def test_bad_arguments_exit_2(capsys):
    for argv in (["count", "--pattern", "123", "--n", "3"], ["bijection", "b-to-d", "--perm", "1,1"],
                 ["enumerate", "Q(3)"], ["bijection", "compose132", "--n", "3"]):
        with pytest.raises(SystemExit) as exc:
            main(argv)
        assert exc.value.code == 2


def test_enumerate(capsys):
    assert run(capsys, "enumerate", "B(3)")[1] == "3,2,1\n"
    status, out, _ = run(capsys, "enumerate", "E(4,1)")
    lines = out.splitlines()
    assert status == 0 and len(lines) == 4 and lines == sorted(lines)
    assert len(run(capsys, "enumerate", "A(3)")[1].splitlines()) == 6


def test_enumerate_json_format(capsys):
    status, out, _ = run(capsys, "enumerate", "B(4)", "--format", "json")
    record = json.loads(out)
    assert record["result"]["permutations"] == ["3,2,1,4", "4,2,1,3"]
    assert record["result"]["count"] == "2"


def test_oracle_ceiling(capsys):
    status, _, err = run(capsys, "enumerate", "A(11)")
    assert status == 3 and "ceiling" in err
    status, out, _ = run(capsys, "--oracle-ceiling", "11", "count", "--pattern", "21", "--n", "11", "--method", "oracle")
    assert (status, out.strip()) == (0, "144")


@pytest.mark.parametrize(
    "pattern, max_n, needle",
    [("321", "8", "2064"), ("21", "9", "55"), ("132", "9", "|E(n,3)|")],
)
def test_verify_all_pass(capsys, pattern, max_n, needle):
    status, out, _ = run(capsys, "verify", "--pattern", pattern, "--max-n", max_n)
    assert status == 0
    assert "FAIL" not in out and needle in out


def test_verify_reports_mismatch(capsys, monkeypatch):
    from nonconsec import counting

    monkeypatch.setattr(counting, "count_132_formula", lambda n: 0)
    status, out, _ = run(capsys, "verify", "--pattern", "132", "--max-n", "3")
    assert status == 1
    assert "FAIL" in out


def test_bijection_decompose132(capsys):
    status, out, _ = run(capsys, "bijection", "decompose132", "--perm", "10,9,5,7,6,8,2,4,3,1")
    assert status == 0
    assert out == "positions: 4,8\nremainder: 6,5,3,4,2,1\n"


def test_bijection_compose132_roundtrip(capsys):
    status, out, _ = run(capsys, "--json", "bijection", "compose132", "--n", "10", "--set", "4,8",
                         "--perm", "6,5,3,4,2,1", "--roundtrip")
    record = json.loads(out)
    assert status == 0
    assert record["result"] == {"perm": "10,9,5,7,6,8,2,4,3,1", "roundtrip": True}


@pytest.mark.parametrize(
    "argv, expected",
    [
        (["b-to-d", "--perm", "3,2,1"], "1\n"),
        (["d-to-b", "--perm", "2,1", "--roundtrip"], "4,2,1,3\nroundtrip: ok\n"),
        (["split321", "--perm", "1,4,3,2,5", "--roundtrip"], "sigma: 1,2\ntau: 3,2,1,4\nroundtrip: ok\n"),
        (["unsplit321", "--sigma", "1,2", "--tau", "3,2,1,4", "--roundtrip"], "1,4,3,2,5\nroundtrip: ok\n"),
        (["swap21", "--n", "4", "--set", "1,3", "--roundtrip"], "2,1,4,3\nroundtrip: ok\n"),
        (["swap21", "--perm", "2,1,4,3"], "1,3\n"),
    ],
)
def test_bijections(capsys, argv, expected):
    status, out, _ = run(capsys, "bijection", *argv)
    assert (status, out) == (0, expected)


def test_bijection_domain_error_exits_3(capsys):
    status, _, err = run(capsys, "bijection", "b-to-d", "--perm", "1,2,3")
    assert status == 3 and "B(3)" in err
    status, _, _ = run(capsys, "bijection", "decompose132", "--perm", "1,4,2,3")
    assert status == 3


@pytest.mark.parametrize(
    "which, terms, expected",
    [
        ("GF132-closed", "9", "1 1 2 6 18 57 190 654 2306"),
        ("GF132-composed", "9", "1 1 2 6 18 57 190 654 2306"),
        ("catalan", "5", "1 1 2 5 14"),
        ("A321", "8", "1 2 6 18 56 182 607 2064"),
        ("D321", "5", "1 2 5 16 51"),
    ],
)
def test_series(capsys, which, terms, expected):
    status, out, _ = run(capsys, "series", which, "--terms", terms)
    assert (status, out.strip()) == (0, expected)


def test_json_record_schema_and_round_trip(capsys, tmp_path):
    target = tmp_path / "record.json"
    status, out, _ = run(capsys, "series", "A321", "--terms", "4", "--json", "--out", str(target))
    record = json.loads(out)
    assert set(record) == {"command", "params", "result", "methods", "version"}
    assert record["result"]["coefficients"] == ["1", "2", "6", "18"]
    assert dumps(record) == out
    assert target.read_text() == out


def test_quiet(capsys):
    status, out, _ = run(capsys, "--quiet", "verify", "--pattern", "21", "--max-n", "5")
    assert (status, out) == (0, "")


def test_output_is_stable_across_runs(capsys):
    first = run(capsys, "--json", "enumerate", "E(6,1)")[1]
    second = run(capsys, "--json", "enumerate", "E(6,1)")[1]
    assert first == second


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "nonconsec.cli", "count", "--pattern", "132", "--n", "5"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert proc.stdout.strip() == "57"
