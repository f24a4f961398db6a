from __future__ import annotations

import json
import os
import subprocess
import sys

import pytest

from boundquiver.algebra import FIXTURE_TAGS, named_fixture
from boundquiver.cli import main
from boundquiver.fileformat import parse_text, serialize


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_analyze_canonical(capsys):
    code, out, _ = run(capsys, "analyze", "fixture:A3", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["gl_dim"] == 3
    assert data["auslander_order"] >= 2
    assert data["is_nakayama"] is True
    assert data["admits_trivial_mos"]["holds"] is True


def test_enumerate_nonexistence(capsys):
    code, out, _ = run(capsys, "enumerate", "fixture:E410-2", "--n", "1")
    assert code == 0
    assert out.splitlines()[0] == "0 candidates"


def test_enumerate_json(capsys):
    code, out, _ = run(capsys, "enumerate", "fixture:A2", "--n", "1", "--format", "json")
    data = json.loads(out)
    assert data["count"] == 1 and data["candidates"][0]["is_trivial"]


def test_resolve_e66(capsys):
    code, out, _ = run(capsys, "resolve", "fixture:E66", "--module", "S2")
    assert code == 0
    assert out.splitlines()[0] == "0 → P(2) → P(1) → P(2) → S(2) → 0"
    assert "pd S(2) = 2" in out


def test_resolve_injective(capsys):
    code, out, _ = run(capsys, "resolve", "fixture:A2", "--module", "S(1)", "--kind", "injective")
    assert code == 0
    assert out.splitlines()[0] == "0 → S(1) → I(1) → I(2) → I(3) → 0"


def test_ext(capsys):
    code, out, _ = run(capsys, "ext", "fixture:E64", "I3", "P3", "1", "--check", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["dim"] == 1 and data["dim_injective_route"] == 1


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "fixture:A2", "--theorem", "almost-split")
    assert code == 0 and out.startswith("almost-split: PASS")
    code, out, err = run(capsys, "verify", "fixture:E66", "--theorem", "pd-id-sum")
    assert code == 1 and "hypothesis unmet" in err
    code, out, _ = run(capsys, "verify", "fixture:E66", "--theorem", "all")
    assert code == 0 and "SKIPPED" in out


def test_fixtures_listing(capsys):
    code, out, _ = run(capsys, "fixtures", "--format", "json")
    data = json.loads(out)
    assert [r["tag"] for r in data["fixtures"]] == list(FIXTURE_TAGS)
    for r in data["fixtures"]:
        assert parse_text(r["text"]) == named_fixture(r["tag"])


def test_input_errors(capsys, tmp_path):
    assert run(capsys, "analyze", "fixture:NOPE")[0] == 2
    assert run(capsys, "analyze", str(tmp_path / "missing.quiver"))[0] == 2
    bad = tmp_path / "bad.quiver"
    bad.write_text("vertices 3\narrow b1 2 1\narrow b2 3 2\nrelation b2*b1\n", encoding="utf-8")
    code, _, err = run(capsys, "analyze", str(bad))
    assert code == 2 and "line 4" in err
    syntax = tmp_path / "syntax.quiver"
    syntax.write_text("vertices 2\nbogus\n", encoding="utf-8")
    code, _, err = run(capsys, "analyze", str(syntax))
    assert code == 2 and "line 2, column 1" in err
    assert run(capsys, "resolve", "fixture:A2", "--module", "S9")[0] == 2
    assert run(capsys, "resolve", "fixture:A2", "--module", "X1")[0] == 2


def test_computation_error_exit(capsys):
    # the injective test needs the complete list of indecomposables
    code, _, err = run(capsys, "enumerate", "fixture:E65", "--n", "1")
    assert code == 1 and "not Nakayama" in err


def test_file_input_and_atlas(capsys, tmp_path):
    text = serialize(named_fixture("A2")) + """
module S1
  dims = [1, 0, 0]
end
module S2
  dims = [0, 1, 0]
end
module S3
  dims = [0, 0, 1]
end
module P2
  dims = [1, 1, 0]
  b1 = [[1]]
end
module P3
  dims = [0, 1, 1]
  b2 = [[1]]
end
"""
    f = tmp_path / "a2.quiver"
    f.write_text(text, encoding="utf-8")
    code, out, _ = run(capsys, "enumerate", str(f), "--n", "1", "--atlas-from-file", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["count"] == 1 and data["atlas"]["origin"] == "user-supplied"
    code, out, _ = run(capsys, "ext", str(f), "S2", "P2", "0")
    assert out.strip() == "dim Ext^0(S2, P2) = 0"


def test_convention_flag(capsys, tmp_path):
    f = tmp_path / "e66.quiver"
    f.write_text(serialize(named_fixture("E66")), encoding="utf-8")
    _, ours, _ = run(capsys, "analyze", str(f), "--format", "json")
    _, other, _ = run(capsys, "analyze", str(f), "--format", "json", "--convention", "left-to-right")
    assert json.loads(ours)["admits_trivial_mos"]["witness"] == 2
    assert json.loads(other)["admits_trivial_mos"]["witness"] == 1


@pytest.mark.parametrize("argv", [
    ["analyze", "fixture:REM", "--format", "json"],
    ["enumerate", "fixture:REM", "--n", "1", "--format", "json"],
    ["resolve", "fixture:E65", "--module", "S6", "--format", "json"],
])
def test_json_byte_identical_across_processes(argv):
    outs = []
    for seed in ("1", "2"):
        env = dict(os.environ, PYTHONHASHSEED=seed)
        proc = subprocess.run([sys.executable, "-m", "boundquiver", *argv], capture_output=True,
                              env=env, check=True)
        outs.append(proc.stdout)
    assert outs[0] == outs[1]
    json.loads(outs[0])


def test_log_env(tmp_path):
    env = dict(os.environ, BOUNDQUIVER_LOG="debug")
    proc = subprocess.run([sys.executable, "-m", "boundquiver", "fixtures"], capture_output=True, env=env)
    assert proc.returncode == 0 and b"fixture:A2" in proc.stdout
