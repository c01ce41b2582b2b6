import io
import json
import subprocess
import sys
from dataclasses import replace

import pytest

from hankelcf.catalog import ENTRIES, Report, registry
from hankelcf.cli import run
from hankelcf.series import TruncatedSeries
from test_catalog import corrupted


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_euler():
    assert call("euler", "--n", "9") == (0, "1 1 1 2 5 16 61 272 1385 7936\n", "")
    code, text, _ = call("euler", "--n", "4", "--kind", "e")
    assert text == "1 1 1/2 1/3 5/24\n"
    assert call("euler", "--n", "3", "--kind", "secant_power", "--r", "2")[1] == "1 2 16 272\n"
    assert call("euler", "--n", "3", "--kind", "secant_power")[0] == 2


def test_hankel():
    assert call("hankel", "--series", "euler", "--max", "4") == (0, "1 1 0 -1 -9\n", "")
    assert call("hankel", "--coeffs", "1,1,2,5,14", "--max", "3")[1] == "1 1 1 1\n"


def test_qeuler():
    code, text, _ = call("qeuler", "--n", "9", "--q", "-1")
    assert text == "1 1 1 2 3 6 11 24 51 122\n"
    code, text, _ = call("qeuler", "--n", "4")
    assert text.splitlines()[-1] == "E_4(q) = 4 + q"


def test_hfrac():
    code, text, _ = call("hfrac", "--series", "euler", "--order", "20", "--profile")
    assert code == 0 and text.startswith("delta=2 class=H")
    assert "s = 0 1 3 4 5 7" in text
    code, text, _ = call("hfrac", "--coeffs", "1,1,1,1,1", "--json")
    data = json.loads(text)
    assert data["class"] == "J" and data["delta"] == 2
    assert call("hfrac", "--order", "10", "--delta", "1", "--profile")[0] == 2


def test_perm_stats():
    assert call("perm-stats", "--n", "6", "--weight", "W2") == (0, "61\n", "")
    assert call("perm-stats", "--n", "5", "--weight", "W4")[1] == "16\n"
    assert call("perm-stats", "--sigma", "1,3,2")[1] == "val=2 pk=1 da=0 dd=0 des=1 asc=1\n"
    assert call("perm-stats", "--n", "10")[0] == 2
    assert call("perm-stats", "--sigma", "1,1")[0] == 2
    code, text, _ = call("perm-stats", "--n", "6", "--check-cf", "exp", "--seed", "4", "--json")
    assert code == 0 and json.loads(text)["status"] == "PASS"


def test_verify_single():
    assert call("verify", "--id", "Thm1.1", "--order", "30") == (0, "PASS\n", "")
    code, text, _ = call("verify", "--id", "F1", "--r", "3", "--order", "20", "--json")
    rep = Report.from_dict(json.loads(text))
    assert code == 0 and rep.id == "F1" and rep.passed and rep.first_mismatch is None
    code, text, _ = call("verify", "--id", "F2", "--order", "12", "--verbose")
    assert code == 0 and "note: displayed a_3" in text


def test_verify_failure_exit_code(monkeypatch):
    entry = ENTRIES["F10"]
    original = entry.pattern
    monkeypatch.setitem(registry.ENTRIES, "F10", replace(entry, pattern=lambda: corrupted(original())))
    code, text, _ = call("verify", "--id", "F10", "--json")
    data = json.loads(text)
    assert code == 1 and data["status"] == "FAIL"
    assert set(data["first_mismatch"]) >= {"n", "expected", "got"}


def test_verify_all_json():
    code, text, _ = call("verify", "--all", "--json", "--r", "1", "--order", "20", "--n-max", "6")
    reports = [Report.from_dict(d) for d in json.loads(text)]
    assert code == 0 and all(r.passed for r in reports)
    assert [r.id for r in reports] == sorted(r.id for r in reports)


def test_usage_errors():
    code, _, err = call("verify", "--id", "F99")
    assert code == 2 and "F99" in err
    assert call("verify")[0] == 2
    assert call("verify", "--id", "Thm1.1", "--r", "2")[0] == 2
    assert call("bogus")[0] == 2
    assert call("euler", "--n", "-1")[0] == 2
    assert call("hankel", "--coeffs", "1,x", "--max", "1")[0] == 2


def test_order_cap(monkeypatch):
    monkeypatch.setenv("HFRAC_MAX_ORDER", "10")
    code, _, err = call("hfrac", "--order", "11")
    assert code == 2 and "HFRAC_MAX_ORDER" in err
    assert call("hfrac", "--order", "10")[0] == 0


def test_series_file(tmp_path):
    path = tmp_path / "s.json"
    path.write_text(json.dumps(TruncatedSeries([1, 1, 2, 5, 14, 42, 132]).to_dict()))
    assert call("hankel", "--file", str(path), "--max", "3")[1] == "1 1 1 1\n"


def test_deterministic_output():
    argv = ("verify", "--id", "H10", "--json")
    first = call(*argv)
    second = call(*argv)
    strip = lambda t: {k: v for k, v in json.loads(t).items() if k != "elapsed_ms"}
    assert strip(first[1]) == strip(second[1])
    assert call("hfrac", "--order", "15") == call("hfrac", "--order", "15")


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "hankelcf", "euler", "--n", "5"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and proc.stdout == "1 1 1 2 5 16\n"
