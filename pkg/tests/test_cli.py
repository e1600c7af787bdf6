import json
import subprocess
import sys

import pytest

from ramaseries.cli import EXIT_FAIL, EXIT_OK, EXIT_USAGE, main
from ramaseries.numeric import PREC_ENV_VAR


def test_list_filter(capsys):
    assert main(["list", "--filter", "COR1.*"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "7 identities" in out
    assert "COR1.0" in out and "COR1.6" in out


def test_list_json(capsys):
    assert main(["list", "--filter", "DILOG.TWO.*", "--json"]) == EXIT_OK
    data = json.loads(capsys.readouterr().out)
    assert [d["id"] for d in data] == [f"DILOG.TWO.{i}" for i in range(21, 27)]
    assert all({"id", "lhs", "anchor", "status", "params", "defaults"} <= set(d) for d in data)


def test_verify_ok(capsys):
    assert main(["verify", "--id", "DILOG.TWO.21"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "contained  True" in out


def test_verify_params(capsys):
    code = main(["verify", "--id", "THM1", "--param", "z=1/sqrt(5)", "--param", "p=2", "--prec", "320",
                 "--width", "1e-50"])
    assert code == EXIT_OK
    assert "contained  True" in capsys.readouterr().out


def test_verify_as_printed_discrepancy_exits_zero(capsys):
    assert main(["verify", "--id", "BINOM.B59", "--param", "m=2"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "AS_PRINTED" in out and "contained  False" in out


@pytest.mark.parametrize("argv", [
    ["verify", "--id", "NO.SUCH.ID"],
    ["verify", "--id", "THM1", "--param", "z=2", "--param", "p=1"],
    ["verify", "--id", "THM1", "--param", "z"],
    ["verify", "--id", "COR1.1", "--width", "-1"],
    ["verify", "--id", "COR1.1", "--width", "wide"],
    ["verify", "--id", "COR1.1", "--prec", "8"],
    ["run", "--filter", "TELE.*", "--jobs", "0"],
])
def test_usage_errors(capsys, argv):
    assert main(argv) == EXIT_USAGE
    assert "error:" in capsys.readouterr().err


def test_argparse_errors_exit_2():
    with pytest.raises(SystemExit) as exc:
        main(["verify"])
    assert exc.value.code == EXIT_USAGE


def test_bad_env(monkeypatch, capsys):
    monkeypatch.setenv(PREC_ENV_VAR, "lots")
    assert main(["verify", "--id", "COR1.1"]) == EXIT_USAGE
    assert PREC_ENV_VAR in capsys.readouterr().err


def test_env_precision(monkeypatch, tmp_path, capsys):
    monkeypatch.setenv(PREC_ENV_VAR, "320")
    path = tmp_path / "r.json"
    assert main(["run", "--filter", "TELE.*", "--report", str(path)]) == EXIT_OK
    assert json.loads(path.read_text())["precision_bits"] == 320


def test_run_report(tmp_path, capsys):
    path = tmp_path / "report.json"
    assert main(["run", "--filter", "PARTICULAR.*", "--jobs", "2", "--report", str(path)]) == EXIT_OK
    report = json.loads(path.read_text())
    assert {"version", "precision_bits", "started_at", "entries", "summary"} <= set(report)
    assert report["summary"] == {"total": 6, "passed": 6, "failed": 0, "as_printed_discrepancies": 0}
    for e in report["entries"]:
        assert {"id", "params", "status", "contained", "bracket_lo", "bracket_hi", "rhs", "residual", "terms_used",
                "elapsed_seconds"} <= set(e)
        digits = e["rhs"].lstrip("-0.").replace(".", "").split("e")[0]
        assert len(digits) >= 40
    assert "total 6  passed 6" in capsys.readouterr().out


def test_run_as_printed_only_exits_zero(capsys):
    assert main(["run", "--filter", "RAM61"]) == EXIT_OK
    assert "as-printed discrepancies" in capsys.readouterr().out


def test_run_failure_exit_code(monkeypatch, capsys):
    # a MUST_PASS entry whose closed form is perturbed must fail the run
    from ramaseries.catalog import records

    rec = records.get("TELE.1")
    original = records.IdentityRecord.rhs

    def perturbed(self, parsed, ctx):
        value = original(self, parsed, ctx)
        return value + ctx.mpf("1e-3") if self.id == rec.id else value

    monkeypatch.setattr(records.IdentityRecord, "rhs", perturbed)
    assert main(["run", "--filter", "TELE.1"]) == EXIT_FAIL
    assert main(["verify", "--id", "TELE.1"]) == EXIT_FAIL
    assert "FAIL" in capsys.readouterr().out


def test_report_write_failure(tmp_path, capsys):
    bad = tmp_path / "missing" / "report.json"
    assert main(["run", "--filter", "TELE.1", "--report", str(bad)]) == EXIT_USAGE


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "ramaseries", "list", "--filter", "TELE.*"],
                          capture_output=True, text=True, timeout=120)
    assert proc.returncode == 0
    assert "3 identities" in proc.stdout
