import math

import pytest

from tmsums import verify
from tmsums.cli import NAIVE_CAP, ScanConfig, build_parser, main, run_scan


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# ---------------------------------------------------------------------------
# scan
# ---------------------------------------------------------------------------

def test_scan_farey_row_count(tmp_path, capsys):
    out = tmp_path / "scan.csv"
    code, stdout, _ = run_cli(capsys, "scan", "--x", "64", "128",
                              "--farey", "5", "--out", str(out), "--jobs", "1")
    assert code == 0
    lines = out.read_text().splitlines()
    assert lines[0].startswith("alpha,a,q,theta,X,abs_S0")
    assert len(lines) == 1 + 11 * 2  # |F_5| = 11 frequencies, two cutoffs
    # sorted by (X, alpha)
    rows = [line.split(",") for line in lines[1:]]
    keys = [(int(r[4]), float(r[0])) for r in rows]
    assert keys == sorted(keys)


def test_scan_determinism(tmp_path, capsys):
    out1, out2 = tmp_path / "a.csv", tmp_path / "b.csv"
    args = ["scan", "--x", "100", "--uniform", "4", "--seed", "7"]
    code1, _, _ = run_cli(capsys, *args, "--out", str(out1), "--jobs", "1")
    code2, _, _ = run_cli(capsys, *args, "--out", str(out2), "--jobs", "2")
    assert code1 == code2 == 0
    assert out1.read_bytes() == out2.read_bytes()


def test_scan_anchor_row(tmp_path, capsys):
    out = tmp_path / "anchor.csv"
    code, _, _ = run_cli(capsys, "scan", "--x", "4096", "--alphas", "0",
                         "--out", str(out), "--jobs", "1")
    assert code == 0
    row = out.read_text().splitlines()[1].split(",")
    # alpha = 0: |S0| = |sum eps(n)| <= 2
    assert float(row[5]) <= 2.0
    assert float(row[6]) <= 2.0 / 4096
    assert (row[1], row[2]) == ("0", "1")


def test_scan_config_file_and_override(tmp_path, capsys):
    cfg = tmp_path / "scan.cfg"
    cfg.write_text("x_list=64\nfarey=3\nc=1.0\noutput_path="
                   + str(tmp_path / "cfg.csv") + "\njobs=1\n")
    code, _, _ = run_cli(capsys, "scan", "--config", str(cfg))
    assert code == 0
    assert (tmp_path / "cfg.csv").exists()
    # flag overrides the file value
    override = tmp_path / "override.csv"
    code, _, _ = run_cli(capsys, "scan", "--config", str(cfg),
                         "--out", str(override))
    assert code == 0
    assert override.exists()


def test_scan_unwritable_path(tmp_path, capsys):
    code, _, err = run_cli(capsys, "scan", "--x", "64", "--farey", "2",
                           "--out", str(tmp_path / "no/such/dir/x.csv"),
                           "--jobs", "1")
    assert code == 2
    assert "cannot write" in err


def test_scan_missing_source(capsys):
    code, _, err = run_cli(capsys, "scan", "--x", "64")
    assert code == 2


def test_scan_config_validation():
    with pytest.raises(ValueError):
        ScanConfig(X_list=[2], alpha_source="farey", farey_order=3)
    with pytest.raises(ValueError):
        ScanConfig(X_list=[64], alpha_source="uniform", uniform_count=0)
    cfg = ScanConfig(X_list=[64], alpha_source="farey", farey_order=5)
    assert len(cfg.alphas()) == 11


# ---------------------------------------------------------------------------
# trace
# ---------------------------------------------------------------------------

def test_trace_h4(capsys):
    code, out, _ = run_cli(capsys, "trace", "--h", "4", "--beta", "0.0",
                           "--x", "256")
    assert code == 0
    lines = [l for l in out.splitlines() if l and not l.startswith("#")]
    data = [l for l in lines if l[0].isdigit()]
    assert len(data) == 3  # levels 0, 1, 2
    final = data[-1].split()
    assert float(final[6]) == pytest.approx(4.0)  # re(x)
    assert float(final[8]) == pytest.approx(0.0)  # re(y)
    err_line = next(l for l in out.splitlines() if "absolute error" in l)
    assert float(err_line.split("=")[1]) <= 1e-9


def test_trace_h3_initialization(capsys):
    code, out, _ = run_cli(capsys, "trace", "--h", "3", "--beta", "0.0",
                           "--x", "64")
    assert code == 0
    level0 = next(l for l in out.splitlines() if l.startswith("0 "))
    cols = level0.split()
    assert float(cols[6]) == 0.0 and float(cols[8]) == 1.0  # (x0, y0) = (0, 1)


def test_trace_rejects_h1(capsys):
    code, _, err = run_cli(capsys, "trace", "--h", "1", "--x", "64")
    assert code == 2


def test_trace_skips_oracle_above_cap(capsys):
    code, out, _ = run_cli(capsys, "trace", "--h", "4", "--beta", "0.25",
                           "--x", str(NAIVE_CAP * 10))
    assert code == 0
    assert "skipped" in out


# ---------------------------------------------------------------------------
# gelfond
# ---------------------------------------------------------------------------

def test_gelfond_table(capsys):
    code, out, _ = run_cli(capsys, "gelfond", "--x", "1024", "--m", "4")
    assert code == 0
    rows = [l.split(",") for l in out.splitlines()[1:]]
    assert len(rows) == 8  # two classes, four residues
    assert sum(int(r[4]) for r in rows) == 1024
    for r in rows:
        assert float(r[5]) == 1024 / 8


def test_gelfond_rejects_zero_modulus(capsys):
    code, _, _ = run_cli(capsys, "gelfond", "--x", "100", "--m", "0")
    assert code == 2


# ---------------------------------------------------------------------------
# bench / approx / verify
# ---------------------------------------------------------------------------

def test_bench_small_and_capped(capsys):
    code, out, _ = run_cli(capsys, "bench", "--x", "1000", str(10**9))
    assert code == 0
    lines = out.splitlines()
    assert any("skipped (cap)" in l for l in lines)
    small = next(l for l in lines if l.strip().startswith("1000"))
    assert "e-" in small.split()[-1] or "0.0" in small.split()[-1]


def test_approx_lists_convergents(capsys):
    code, out, _ = run_cli(capsys, "approx", "--alpha", "0.3", "--qmax", "10")
    assert code == 0
    assert "3,10," in out
    assert "# best: 3/10" in out


def test_verify_quick_exit_zero(capsys):
    code, out, _ = run_cli(capsys, "verify", "--level", "quick")
    assert code == 0
    assert "checks passed" in out


def test_verify_failure_exit_one(capsys, monkeypatch):
    def broken_check():
        return verify.CheckResult(name="broken", passed=False,
                                  detail="intentionally failing", elapsed=0.0)

    monkeypatch.setattr(verify, "QUICK_SUITE", [(broken_check, {})])
    code, out, _ = run_cli(capsys, "verify", "--level", "quick")
    assert code == 1
    assert "FAIL" in out


def test_usage_error_exit_two():
    with pytest.raises(SystemExit) as exc:
        build_parser().parse_args(["scan", "--farey", "not-an-int"])
    assert exc.value.code == 2


def test_run_scan_library_surface(tmp_path):
    cfg = ScanConfig(X_list=[64], alpha_source="explicit", explicit=[0.5],
                     jobs=1, output_path=str(tmp_path / "lib.csv"))
    lines = run_scan(cfg)
    assert len(lines) == 2
    row = lines[1].split(",")
    assert row[2] == "2"  # q of 1/2
    assert math.isclose(float(row[0]), 0.5)
