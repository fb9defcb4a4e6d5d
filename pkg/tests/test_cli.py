import csv
import io
import json
from fractions import Fraction

import pytest

from kummerchi.cli import (
    EXIT_CAP,
    EXIT_IDENTITY_FAILURE,
    EXIT_OK,
    build_parser,
    exit_code_for_reports,
    main,
)
from kummerchi.kummer import Check, Report, kummer_rows


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_table_text(capsys):
    code, out, err = run_cli(capsys, "table", "--max-n", "3")
    assert code == EXIT_OK and err == ""
    lines = out.strip().splitlines()
    assert lines[0].split() == ["n", "sigma2", "chi", "dt", "s"]
    assert lines[2].split() == ["2", "5", "160", "-5/2", "5/2"]
    assert lines[3].split() == ["3", "10", "2430", "10/3", "10/3"]


def test_table_text_genus2(capsys):
    code, out, _ = run_cli(capsys, "table", "--max-n", "2", "--genus", "2")
    assert code == EXIT_OK
    chis = [line.split()[2] for line in out.strip().splitlines()[1:]]
    assert chis == ["1", "24"]


def test_table_csv(capsys):
    code, out, _ = run_cli(capsys, "table", "--max-n", "3", "--format", "csv")
    assert code == EXIT_OK
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["n", "sigma2", "chi", "dt", "s"]
    assert rows[2] == ["2", "5", "160", "-5/2", "5/2"]
    assert rows[3][2] == "2430"


def test_table_json_round_trip(capsys):
    code, out, _ = run_cli(capsys, "table", "--max-n", "8", "--format", "json")
    assert code == EXIT_OK
    payload = json.loads(out)
    assert payload["genus"] == 3 and payload["max_n"] == 8
    recomputed = {r.n: r for r in kummer_rows(8, g=3)}
    assert len(payload["rows"]) == 8
    for row in payload["rows"]:
        expect = recomputed[row["n"]]
        assert row["sigma2"] == expect.sigma2
        assert row["chi"] == expect.chi
        assert Fraction(row["dt"]) == expect.dt
        assert Fraction(row["s"]) == expect.s


def test_table_json_single_row(capsys):
    _, out, _ = run_cli(capsys, "table", "--max-n", "1", "--format", "json")
    payload = json.loads(out)
    assert payload["rows"] == [{"n": 1, "sigma2": 1, "chi": 1, "dt": "1", "s": "1"}]


def test_c_table_text(capsys):
    code, out, _ = run_cli(capsys, "c-table", "--max-n", "3")
    assert code == EXIT_OK
    assert "3^1" in out and "1^1 2^1" in out and "1^3" in out
    assert "sigma2(3) = 10" in out and "ok" in out


def test_c_table_json(capsys):
    code, out, _ = run_cli(capsys, "c-table", "--max-n", "4", "--format", "json")
    assert code == EXIT_OK
    payload = json.loads(out)
    got = {row["partition"]: row["c"] for row in payload["rows"]}
    assert got == {"4^1": 4, "1^1 3^1": -4, "2^2": -2, "1^2 2^1": 4, "1^4": -1}
    assert payload["sigma2_check"] == {"sum": 21, "sigma2": 21, "ok": True}


def test_c_table_csv_footer(capsys):
    code, out, _ = run_cli(capsys, "c-table", "--max-n", "2", "--format", "csv")
    assert code == EXIT_OK
    lines = out.strip().splitlines()
    assert lines[0] == "partition,c"
    assert lines[1:3] == ["2^1,2", "1^2,-1"]
    assert lines[3].startswith("#") and "ok" in lines[3]


def test_pd_text_and_csv(capsys):
    code, out, _ = run_cli(capsys, "pd", "--dim", "2", "--max-n", "5")
    assert code == EXIT_OK
    counts = [line.split()[1] for line in out.strip().splitlines()[1:]]
    assert counts == ["1", "1", "3", "6", "13", "24"]
    code, out, _ = run_cli(capsys, "pd", "--dim", "1", "--max-n", "5", "--format", "csv")
    rows = list(csv.reader(io.StringIO(out)))
    assert [r[1] for r in rows[1:]] == ["1", "1", "2", "3", "5", "7"]
    assert all(r[2] == "yes" for r in rows[1:])


def test_pd_json_flags_unchecked_tail(capsys):
    code, out, _ = run_cli(capsys, "pd", "--dim", "2", "--max-n", "18", "--format", "json")
    assert code == EXIT_OK
    payload = json.loads(out)
    by_n = {row["n"]: row for row in payload["rows"]}
    assert by_n[16]["cross_checked"] is True
    assert by_n[17]["cross_checked"] is False
    assert by_n[18]["cross_checked"] is False
    assert by_n[12]["count"] == 1479


def test_pd_zero_row(capsys):
    code, out, _ = run_cli(capsys, "pd", "--dim", "3", "--max-n", "0", "--format", "csv")
    assert code == EXIT_OK
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[1] == ["0", "1", "yes"]


def test_pd_high_dimension_needs_cap(capsys):
    code, out, err = run_cli(capsys, "pd", "--dim", "4", "--max-n", "11")
    assert code == EXIT_CAP
    assert out == ""
    assert "--enum-cap" in err
    code, _, _ = run_cli(capsys, "pd", "--dim", "4", "--max-n", "4")
    assert code == EXIT_OK


def test_verify_passes(capsys):
    code, out, _ = run_cli(capsys, "verify", "--max-n", "6", "--genus", "1,2,3")
    assert code == EXIT_OK
    assert "all identities hold" in out
    assert out.count("PASS") == 8  # 2 + 2 per genus


def test_verify_json(capsys):
    code, out, _ = run_cli(
        capsys, "verify", "--max-n", "6", "--genus", "2,3", "--format", "json"
    )
    assert code == EXIT_OK
    payload = json.loads(out)
    assert payload["passed"] is True
    assert payload["genus"] == [2, 3]
    assert [r["failed"] for r in payload["reports"]] == [0] * 6
    assert all(r["failures"] == [] for r in payload["reports"])


def test_verify_csv(capsys):
    code, out, _ = run_cli(
        capsys, "verify", "--max-n", "5", "--genus", "1", "--format", "csv"
    )
    assert code == EXIT_OK
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["name", "checks", "failed", "passed"]
    assert {r[0] for r in rows[1:]} == {
        "sigma2-convolution",
        "single-step",
        "chi-series(g=1)",
        "first-order(g=1)",
    }


def test_verify_cap_exit(capsys):
    code, out, err = run_cli(capsys, "verify", "--max-n", "13", "--genus", "4")
    assert code == EXIT_CAP
    assert "--enum-cap" in err
    code, _, _ = run_cli(capsys, "verify", "--max-n", "12", "--genus", "4")
    assert code == EXIT_OK


def test_verify_cap_override(capsys):
    code, _, _ = run_cli(
        capsys, "verify", "--max-n", "13", "--genus", "4", "--enum-cap", "13"
    )
    assert code == EXIT_OK


def test_exit_code_mapping():
    ok = Report("x", (Check("x", 1, True, "1", "1"),))
    bad = Report("y", (Check("y", 1, False, "1", "2"),))
    assert exit_code_for_reports([ok]) == EXIT_OK
    assert exit_code_for_reports([ok, bad]) == EXIT_IDENTITY_FAILURE


def test_parser_rejects_bad_arguments():
    parser = build_parser()
    for argv in (
        ["table", "--max-n", "0"],
        ["table", "--genus", "0"],
        ["verify", "--genus", "1,x"],
        ["verify", "--genus", ""],
        ["pd", "--dim", "0"],
        ["table", "--format", "yaml"],
    ):
        with pytest.raises(SystemExit):
            parser.parse_args(argv)


def test_output_is_deterministic(capsys):
    first = run_cli(capsys, "verify", "--max-n", "7", "--genus", "1,2,3", "--format", "json")
    second = run_cli(capsys, "verify", "--max-n", "7", "--genus", "1,2,3", "--format", "json")
    assert first == second
    third = run_cli(capsys, "table", "--max-n", "9", "--format", "csv")
    fourth = run_cli(capsys, "table", "--max-n", "9", "--format", "csv")
    assert third == fourth
