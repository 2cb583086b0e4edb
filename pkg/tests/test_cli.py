import json

import pytest

from eiii_atlas.cli import cmd_sample, cmd_tables, main
from eiii_atlas.eiii import residual_is_zero
from eiii_atlas.rep27 import PSI0, Vector27
from eiii_atlas.rng import Rng
from eiii_atlas.scalar import ExtScalar
from eiii_atlas.suites import random_antisym


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def _write(tmp_path, obj, name="params.json"):
    path = tmp_path / name
    path.write_text(json.dumps(obj))
    return str(path)


def test_unknown_suite_is_usage_error(capsys):
    code, _, err = run(capsys, "verify", "bogus")
    assert code == 2 and "invalid choice" in err


def test_missing_command_is_usage_error(capsys):
    assert run(capsys)[0] == 2


def test_nonpositive_trials(capsys):
    code, _, err = run(capsys, "verify", "octonion", "--trials", "0")
    assert code == 2 and err.startswith("error:")


def test_verify_report_schema(capsys):
    code, out, _ = run(capsys, "verify", "octonion", "--seed", "3", "--trials", "2")
    assert code == 0
    report = json.loads(out)
    assert report["suite"] == "octonion" and report["seed"] == 3
    assert "elapsed_ms" not in report
    names = [c["name"] for c in report["checks"]]
    assert names == sorted(names)
    assert all(c["status"] == "pass" for c in report["checks"])


def test_verify_is_byte_stable_and_timing_is_opt_in(capsys):
    first = run(capsys, "verify", "octonion", "--trials", "2")[1]
    second = run(capsys, "verify", "octonion", "--trials", "2")[1]
    assert first == second
    timed = json.loads(run(capsys, "verify", "octonion", "--trials", "2", "--timing")[1])
    assert isinstance(timed["elapsed_ms"], int)


def test_tables_octonion_json_and_text(capsys):
    code, out, _ = run(capsys, "tables", "octonion")
    table = json.loads(out)["table"]
    assert code == 0 and len(table) == 8 and table[2][3] == [1, 1]
    code, out, _ = run(capsys, "tables", "octonion", "--format", "text")
    lines = out.splitlines()
    assert lines[0].split() == ["*"] + [f"e{k}" for k in range(8)]
    assert lines[4].split()[0] == "e3"


def test_tables_fierz_dim16(capsys):
    code, out, _ = run(capsys, "tables", "fierz", "--dim", "16")
    tables = json.loads(out)
    assert code == 0 and len(tables) == 1
    assert len(tables[0]["matrix"]) == 5 and all(len(r) == 5 for r in tables[0]["matrix"])


def test_tables_are_byte_stable():
    assert cmd_tables("fierz", 8) == cmd_tables("fierz", 8)
    assert cmd_tables("octonion", fmt="text") == cmd_tables("octonion", fmt="text")


def test_tables_structure(capsys):
    code, _, err = run(capsys, "tables", "structure")
    assert code == 2 and "--algebra" in err
    code, out, _ = run(capsys, "tables", "structure", "--algebra", "f4")
    js = json.loads(out)
    assert code == 0 and js["dim"] == 52 and js["algebra"] == "f4"
    text = cmd_tables("structure", algebra="g2", fmt="text")
    assert text.splitlines()[0] == "g2 dim=14"


def test_solve_s_chart(capsys, tmp_path):
    path = _write(tmp_path, {"psi": {"basis": 0}, "s": "1"})
    code, out, _ = run(capsys, "solve", "s", "--input", path)
    result = json.loads(out)
    assert code == 0 and result["residual"]["nonzero"] == 0 and result["flags"] == []
    point = Vector27.from_json(result["point"])
    assert residual_is_zero(point) and point.s == ExtScalar(1)


def test_solve_tplus_zero_t(capsys, tmp_path):
    path = _write(tmp_path, {"t": "0", "spin8": {"basis": 0}, "u8": ["0"] * 8})
    code, out, err = run(capsys, "solve", "tplus", "--input", path)
    assert code == 1 and out == ""
    assert err.strip() == "error: tcoord must be nonzero"


def test_solve_tminus_chart(capsys, tmp_path):
    path = _write(tmp_path, {"params": {"t": "2", "spin8": {"basis": 3},
                                        "u8": ["1", "0", "-1/2", "0", "0", "3", "0", "1"]}})
    code, out, _ = run(capsys, "solve", "tminus", "--input", path)
    assert code == 0 and json.loads(out)["residual"]["nonzero"] == 0


def test_solve_xinfty_projects_unconstrained_k(capsys, tmp_path):
    rng = Rng(4)
    k = [[c.to_json() for c in row] for row in random_antisym(rng)]
    path = _write(tmp_path, {"f": "1", "K": k, "ubar": [c.to_json() for c in rng.scalars(10)],
                             "s": "1"})
    code, out, _ = run(capsys, "solve", "xinfty", "--input", path)
    result = json.loads(out)
    assert code == 0 and result["flags"] == ["projected"]
    assert result["residual"]["nonzero"] == 0


def test_solve_bad_inputs(capsys, tmp_path):
    code, _, err = run(capsys, "solve", "s", "--input", str(tmp_path / "missing.json"))
    assert code == 2 and "cannot read" in err
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert run(capsys, "solve", "s", "--input", str(bad))[0] == 2
    code, _, err = run(capsys, "solve", "s", "--input", _write(tmp_path, {"s": "1"}))
    assert code == 1 and "invalid chart parameters" in err


def test_sample_is_deterministic(capsys):
    first = run(capsys, "sample", "--seed", "7", "--steps", "5", "--count", "3")
    second = run(capsys, "sample", "--seed", "7", "--steps", "5", "--count", "3")
    assert first == second and first[0] == 0
    points = json.loads(first[1])
    assert [p["index"] for p in points] == [0, 1, 2]
    for p in points:
        assert p["residual_zero"] and residual_is_zero(Vector27.from_json(p["point"]))


def test_sample_zero_steps_is_psi0():
    out = cmd_sample(7, 0, 2)
    assert all(Vector27.from_json(p["point"]) == PSI0 for p in out)


def test_sample_negative_count(capsys):
    assert run(capsys, "sample", "--count", "-1")[0] == 2


@pytest.mark.parametrize("flag", ["--help"])
def test_help_exits_cleanly(capsys, flag):
    assert run(capsys, flag)[0] == 0
