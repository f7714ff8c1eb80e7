"""CLI: output schemas, exit codes, determinism, and format agreement."""

import csv
import io
import json
import subprocess
import sys

import pytest

from specirr import parse_graph6, subdivided_prism, to_graph6
from specirr.cli import REPORT_COLUMNS, main

WITNESS_G6 = to_graph6(subdivided_prism(3))


def run_cli(args, capsys):
    code = main(args)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def parse_csv(text):
    rows = list(csv.reader(io.StringIO(text)))
    header, body = rows[0], rows[1:]
    return header, [dict(zip(header, row)) for row in body]


# ---------------------------------------------------------------------------
# compute
# ---------------------------------------------------------------------------

def test_compute_witness_row(capsys):
    code, out, _ = run_cli(["compute", "--inline", WITNESS_G6], capsys)
    assert code == 0
    header, rows = parse_csv(out)
    assert header == list(REPORT_COLUMNS)
    row = rows[0]
    assert row["graph6"] == WITNESS_G6
    assert (row["n"], row["m"]) == ("7", "10")
    assert float(row["nikiforov"]) == pytest.approx(0.0137, abs=5e-4)
    assert float(row["main"]) == pytest.approx(0.0209, abs=5e-4)
    assert float(row["cgs"]) == pytest.approx(0.0286, abs=5e-4)
    assert float(row["sub_high"]) == pytest.approx(38 / 1029, abs=5e-7)
    assert row["sub_low"] == "NA"


def test_compute_regular_epsilon_zero(capsys):
    code, out, _ = run_cli(["compute", "--inline", "D~{"], capsys)  # K5
    assert code == 0
    _, rows = parse_csv(out)
    assert abs(float(rows[0]["epsilon"])) <= 1e-9


def test_compute_reads_file_with_header(tmp_path, capsys):
    src = tmp_path / "graphs.g6"
    src.write_text(">>graph6<<\n" + WITNESS_G6 + "\nD~{\n")
    code, out, _ = run_cli(["compute", str(src)], capsys)
    assert code == 0
    _, rows = parse_csv(out)
    assert [r["graph6"] for r in rows] == [WITNESS_G6, "D~{"]


def test_compute_skips_bad_line_by_default(tmp_path, capsys):
    src = tmp_path / "graphs.g6"
    src.write_text(WITNESS_G6 + "\n!!!bad!!!\nD~{\n")
    code, out, err = run_cli(["compute", str(src)], capsys)
    assert code == 0
    assert "line 2" in err
    _, rows = parse_csv(out)
    assert len(rows) == 2


def test_compute_strict_aborts(tmp_path, capsys):
    src = tmp_path / "graphs.g6"
    src.write_text(WITNESS_G6 + "\n!!!bad!!!\n")
    code, _, err = run_cli(["compute", str(src), "--strict"], capsys)
    assert code == 2
    assert "line 2" in err


def test_compute_json_and_csv_agree(capsys):
    _, csv_out, _ = run_cli(["compute", "--inline", WITNESS_G6], capsys)
    _, json_out, _ = run_cli(["compute", "--inline", WITNESS_G6, "--format", "json"], capsys)
    _, csv_rows = parse_csv(csv_out)
    json_rows = json.loads(json_out)
    assert len(csv_rows) == len(json_rows) == 1
    for col in REPORT_COLUMNS:
        jval = json_rows[0][col]
        cval = csv_rows[0][col]
        if jval is None:
            assert cval == "NA"
        elif isinstance(jval, str):
            assert cval == jval
        else:
            assert float(cval) == jval


def test_compute_full_precision(capsys):
    _, out, _ = run_cli(
        ["compute", "--inline", WITNESS_G6, "--format", "json", "--precision", "full"],
        capsys)
    row = json.loads(out)[0]
    # full precision must carry more than 6 significant digits
    assert row["rho"] == pytest.approx(2.90417049869408, abs=1e-10)
    assert row["rho"] != float(f"{row['rho']:.6g}")


def test_compute_no_input_is_usage_error(capsys):
    code, _, err = run_cli(["compute"], capsys)
    assert code == 2
    assert "no input" in err


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------

def test_verify_small_clean(tmp_path, capsys):
    vfile = tmp_path / "violations.csv"
    code, _, err = run_cli(
        ["verify", "--n-max", "4", "--violations-file", str(vfile)], capsys)
    assert code == 0
    assert "0 violations" in err
    header, rows = parse_csv(vfile.read_text())
    assert header[0] == "check"
    assert rows == []


def test_verify_only_subregular(tmp_path, capsys):
    vfile = tmp_path / "violations.csv"
    code, _, _ = run_cli(
        ["verify", "--n-max", "5", "--only", "subregular",
         "--violations-file", str(vfile)], capsys)
    assert code == 0


def test_verify_unknown_check(tmp_path, capsys):
    code, _, err = run_cli(
        ["verify", "--n-max", "4", "--only", "bogus",
         "--violations-file", str(tmp_path / "v.csv")], capsys)
    assert code == 2
    assert "unknown check" in err


def test_verify_cap(tmp_path, capsys):
    code, _, err = run_cli(
        ["verify", "--n-max", "12", "--violations-file", str(tmp_path / "v.csv")],
        capsys)
    assert code == 2


def test_verify_self_test_exits_one(tmp_path, capsys):
    vfile = tmp_path / "violations.csv"
    code, _, err = run_cli(
        ["verify", "--n-max", "4", "--self-test", "--violations-file", str(vfile)],
        capsys)
    assert code == 1
    _, rows = parse_csv(vfile.read_text())
    assert rows and all(r["check"] == "self-test-corrupted" for r in rows)


def test_verify_jobs_deterministic(tmp_path, capsys):
    one = tmp_path / "v1.csv"
    two = tmp_path / "v2.csv"
    assert run_cli(["verify", "--n-max", "5", "--violations-file", str(one)],
                   capsys)[0] == 0
    assert run_cli(["verify", "--n-max", "5", "--jobs", "2",
                    "--violations-file", str(two)], capsys)[0] == 0
    assert one.read_bytes() == two.read_bytes()


# ---------------------------------------------------------------------------
# search
# ---------------------------------------------------------------------------

def test_search_hong_range(capsys):
    code, out, _ = run_cli(["search", "--hong", "--n", "4..5"], capsys)
    assert code == 0
    header, rows = parse_csv(out)
    assert header == ["objective", "n", "m", "graph6", "epsilon", "degree_gap", "ties"]
    assert all(r["objective"] == "min" for r in rows)
    assert {r["n"] for r in rows} == {"4", "5"}
    for r in rows:
        assert parse_graph6(r["graph6"]).n == int(r["n"])


def test_search_bell_star(capsys):
    code, out, _ = run_cli(["search", "--bell-max", "--n", "4", "--m", "3"], capsys)
    assert code == 0
    _, rows = parse_csv(out)
    assert sorted(parse_graph6(rows[0]["graph6"]).degrees) == [1, 1, 1, 3]


def test_search_bell_requires_m(capsys):
    code, _, err = run_cli(["search", "--bell-max", "--n", "4"], capsys)
    assert code == 2
    assert "--m" in err


def test_search_cap(capsys):
    code, _, err = run_cli(["search", "--hong", "--n", "12"], capsys)
    assert code == 2
    assert "2 <= n <= 8" in err


# ---------------------------------------------------------------------------
# gen
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("family,size,n,m", [
    ("complete", 4, 4, 6),
    ("cycle", 5, 5, 5),
    ("path", 4, 4, 3),
    ("star", 4, 4, 3),
    ("prism", 3, 6, 9),
    ("subdivided-prism", 3, 7, 10),
])
def test_gen_families(family, size, n, m, capsys):
    code, out, _ = run_cli(["gen", family, str(size)], capsys)
    assert code == 0
    g = parse_graph6(out.strip())
    assert (g.n, g.m) == (n, m)


def test_gen_prism_is_cubic(capsys):
    _, out, _ = run_cli(["gen", "prism", "3"], capsys)
    assert set(parse_graph6(out.strip()).degrees) == {3}


def test_gen_invalid_size(capsys):
    code, _, err = run_cli(["gen", "cycle", "1"], capsys)
    assert code == 2
    assert "n >= 3" in err


# ---------------------------------------------------------------------------
# Exit-code wiring for numerical failures
# ---------------------------------------------------------------------------

def test_non_convergence_exit_code(monkeypatch, capsys):
    import specirr.cli as cli_module
    from specirr import SpectralConvergenceError

    def explode(*args, **kwargs):
        raise SpectralConvergenceError("synthetic non-convergence")

    monkeypatch.setattr(cli_module, "spectral_summary", explode)
    code, _, err = run_cli(["compute", "--inline", WITNESS_G6], capsys)
    assert code == 3
    assert "non-convergence" in err


# ---------------------------------------------------------------------------
# End-to-end determinism through the console entry point
# ---------------------------------------------------------------------------

def test_cli_byte_determinism_subprocess():
    cmd = [sys.executable, "-m", "specirr.cli", "compute", "--inline", WITNESS_G6,
           "--format", "json"]
    first = subprocess.run(cmd, capture_output=True, check=True)
    second = subprocess.run(cmd, capture_output=True, check=True)
    assert first.stdout == second.stdout
    assert json.loads(first.stdout)[0]["graph6"] == WITNESS_G6
