from __future__ import annotations

import json
import shutil
import subprocess
import sys
from importlib import resources

import jsonschema
import pytest
from referencing import Registry, Resource

from charone.cli.main import main

SCHEMA_DIR = resources.files("charone") / "schemas"


def _schemas():
    out = {}
    for entry in SCHEMA_DIR.iterdir():
        if entry.name.endswith(".schema.json"):
            out[entry.name] = json.loads(entry.read_text(encoding="utf-8"))
    return out


SCHEMAS = _schemas()
REGISTRY = Registry().with_resources((name, Resource.from_contents(s)) for name, s in SCHEMAS.items())


def validate(obj, name: str) -> None:
    cls = jsonschema.validators.validator_for(SCHEMAS[name])
    cls.check_schema(SCHEMAS[name])
    cls(SCHEMAS[name], registry=REGISTRY).validate(obj)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_eval_json_example(capsys):
    code, out, _ = run(capsys, "eval", "(q^1(x)q^0+q^0(x)q^1)^2", "--json")
    assert code == 0
    obj = json.loads(out)
    assert obj == {"corners": [[0, 2], [1, 1], [2, 0]]}
    validate(obj, "staircase.schema.json")


def test_eval_other_value_kinds(capsys):
    code, out, _ = run(capsys, "eval", "mu(fr(2,3, q^1(x)q^1))", "--json")
    assert code == 0 and json.loads(out) == {"exp": 5}
    validate(json.loads(out), "zmin.schema.json")
    code, out, _ = run(capsys, "eval", "gamma(sigma(6,4))", "--json")
    assert code == 0
    validate(json.loads(out), "polygon.schema.json")
    code, out, _ = run(capsys, "eval", "q^1(x)q^0 + q^0(x)q^1")
    assert out.strip() == "q^0(x)q^1 + q^1(x)q^0"


def test_eval_syntax_error_exit_code(capsys):
    code, _, err = run(capsys, "eval", "sigma(2,")
    assert code == 2 and "offset 8" in err


def test_eval_writes_svg(capsys, tmp_path):
    path = tmp_path / "fig.svg"
    code, _, _ = run(capsys, "eval", "(q^1(x)q^0+q^0(x)q^1)^3", "--svg", str(path), "--hull")
    assert code == 0
    svg = path.read_text(encoding="utf-8")
    assert svg.startswith("<svg") and "</svg>" in svg
    assert ">a<" in svg and ">b<" in svg
    code, _, err = run(capsys, "eval", "mu(q^0(x)q^0)", "--svg", str(path))
    assert code == 2


def test_reduce(capsys, tmp_path):
    f = tmp_path / "E.json"
    f.write_text(json.dumps({"corners": [[0, 2], [1, 1], [2, 0]]}), encoding="utf-8")
    code, out, _ = run(capsys, "reduce", str(f), "--json")
    assert code == 0 and json.loads(out) == {"extremes": [[0, 2], [2, 0]]}
    validate(json.loads(out), "polygon.schema.json")
    code, out, _ = run(capsys, "reduce", "q^0(x)q^3 + q^1(x)q^1 + q^3(x)q^0", "--json")
    assert json.loads(out)["extremes"] == [[0, 3], [1, 1], [3, 0]]


def test_congruent_example(capsys, tmp_path):
    e, f = tmp_path / "E.json", tmp_path / "F.json"
    e.write_text(json.dumps({"corners": [[0, 2], [1, 1], [2, 0]]}), encoding="utf-8")
    f.write_text(json.dumps({"corners": [[0, 2], [2, 0]]}), encoding="utf-8")
    code, out, _ = run(capsys, "congruent", str(e), str(f), "--slope", "sqrt2")
    assert code == 0 and out.strip() == "true"
    code, out, _ = run(capsys, "congruent", str(e), "q^0(x)q^0", "--slope", "3/2", "--json")
    obj = json.loads(out)
    assert obj["congruent"] is False
    validate(obj, "flags.schema.json")


def test_congruent_user_errors(capsys, tmp_path):
    code, _, _ = run(capsys, "congruent", str(tmp_path / "missing.json"), "q^0(x)q^0", "--slope", "2")
    assert code == 2
    bad = tmp_path / "bad.json"
    bad.write_text("{not json", encoding="utf-8")
    assert run(capsys, "congruent", str(bad), "q^0(x)q^0", "--slope", "2")[0] == 2
    assert run(capsys, "congruent", "q^0(x)q^0", "q^0(x)q^0", "--slope", "banana")[0] == 2


@pytest.mark.parametrize(
    "lhs, rhs, kind, slope",
    [
        ("rational:2/1", "rational:3/1", "psi", "6/1"),
        ("sqrt2", "sqrt3", "psi", None),
        ("sqrt2", "sqrt(2)/2", "id-eps", "1/1"),
        ("sqrt2", "sqrt8", "id-eps-psi", "4/1"),
        ('{"kind":"quadratic","a":0,"b":1,"c":1,"d":2}', "cf-exact:1,2", "psi", None),
    ],
)
def test_compose(capsys, lhs, rhs, kind, slope):
    code, out, _ = run(capsys, "compose", "--lhs", lhs, "--rhs", rhs)
    assert code == 0
    obj = json.loads(out)
    validate(obj, "compose.schema.json")
    assert obj["result"] == kind
    if slope is not None:
        assert obj["slope"] == slope
    if kind != "psi":
        assert obj["eps_slope"] != "0/1" and obj["right_eps_slope"] == "0/1"


def test_compose_truncated_expansion_is_refused(capsys):
    assert run(capsys, "compose", "--lhs", "cf:1,2,2,2", "--rhs", "2")[0] == 2


def test_points(capsys, tmp_path):
    a = json.dumps({"explicit": {"2": "inf"}, "default": 0})
    b = json.dumps({"explicit": {"2": "inf", "3": 1}, "default": 0})
    code, out, _ = run(capsys, "points", "iso", a, b, "--json")
    assert code == 0 and json.loads(out) == {"isomorphic": True}
    validate(json.loads(out), "flags.schema.json")
    validate(json.loads(a), "supernatural.schema.json")
    f = tmp_path / "p.json"
    f.write_text(a, encoding="utf-8")
    assert run(capsys, "points", "member", str(f), "3/8")[1].strip() == "true"
    assert run(capsys, "points", "member", str(f), "1/3")[1].strip() == "false"
    assert run(capsys, "points", "iso", "base", a)[1].strip() == "false"
    assert run(capsys, "points", "member", a, "x/y")[0] == 2


def test_zeta_check(capsys, tmp_path):
    code, out, _ = run(capsys, "zeta", "check", "--u0", "3", "--width", "0.2", "-K", "100", "--pmax", "50", "--json", "--assert")
    assert code == 0
    obj = json.loads(out)
    validate(obj, "zeta_report.schema.json")
    assert obj["relative_discrepancy"] < 5e-2 and obj["within_tolerance"]
    code, out, _ = run(capsys, "zeta", "check", "-K", "5")
    assert code == 0 and "discrepancy" in out


def test_zeta_check_tolerance_failure_and_bad_input(capsys, tmp_path):
    code, _, err = run(capsys, "zeta", "check", "-K", "3", "--rtol", "1e-9", "--assert")
    assert code == 3 and "exceeds" in err
    z = tmp_path / "zeros.txt"
    z.write_text("14.134725141734693\n12.0\n", encoding="utf-8")
    assert run(capsys, "zeta", "check", "--zeros", str(z), "-K", "1")[0] == 2
    assert run(capsys, "zeta", "check", "--zeros", str(tmp_path / "none.txt"))[0] == 2
    assert run(capsys, "zeta", "check", "--u0", "1.05", "--width", "0.2")[0] == 2
    assert run(capsys, "zeta", "check", "--pmax", "2")[0] == 2


def test_argparse_usage_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["compose", "--lhs", "2"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 2


def test_console_script_smoke():
    exe = shutil.which("charone")
    cmd = [exe] if exe else [sys.executable, "-m", "charone.cli.main"]
    res = subprocess.run(cmd + ["compose", "--lhs", "rational:2/1", "--rhs", "rational:3/1"], capture_output=True, text=True, timeout=60)
    assert res.returncode == 0
    assert json.loads(res.stdout)["slope"] == "6/1"
