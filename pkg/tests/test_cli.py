import io
import json
import subprocess
import sys

import pytest

from motzeta import preset
from motzeta.cli import main
from motzeta.errors import ParseError, ValidationError
from motzeta.io import parse_config, render_config

NODE_JSON = """{
  "m": 1,
  "components": [{"id": "E1", "N": 1, "nu": 1}, {"id": "E2", "N": 1, "nu": 1}],
  "strata": [{"J": ["E1"], "chi": 0}, {"J": ["E2"], "chi": 0}, {"J": ["E1", "E2"], "chi": 1}]
}"""


def run(*argv, stdin=None):
    out, err = io.StringIO(), io.StringIO()
    if stdin is not None:
        old = sys.stdin
        sys.stdin = io.StringIO(stdin)
    try:
        code = main(list(argv), out, err)
    finally:
        if stdin is not None:
            sys.stdin = old
    return code, out.getvalue(), err.getvalue()


def test_trace_cusp():
    assert run("trace", "--preset", "cusp", "--d", "6") == (0, "-1\n", "")


def test_zeta_cusp():
    assert run("zeta", "--preset", "cusp")[1] == "(1 - T^6)/((1 - T^2)*(1 - T^3))\n"


def test_verify_node():
    code, out, _ = run("verify", "--preset", "node", "--degree", "20")
    assert code == 0 and out.startswith("cross-identity suite: PASS")


def test_serre_linear_node():
    code, out, err = run("serre", "--preset", "node", "--d", "2")
    assert code == 3 and out == ""
    assert "J={1,2}" in err and "blowup --make-nonlinear 2" in err
    code, _, err = run("serre", "--preset", "node", "--d", "2", "--json")
    assert json.loads(err) ["J"] == ["E1", "E2"]


def test_serre_cusp():
    code, out, _ = run("serre", "--preset", "cusp", "--d", "2", "--json")
    payload = json.loads(out)
    assert code == 0 and payload["euler_char"] == 2 and payload["text"] == "[~E_{1}^o]"


def test_blowup_then_serre_via_steps(tmp_path):
    code, out, _ = run("blowup", "--preset", "node", "--make-nonlinear", "2", "--json")
    assert code == 0
    steps = tmp_path / "steps.json"
    steps.write_text(out)
    code, out, _ = run("serre", "--preset", "node", "--steps", str(steps), "--d", "2")
    assert code == 0 and out.endswith("euler_char = 0\n")


def test_blowup_text_and_missing_edge():
    code, out, _ = run("blowup", "--preset", "cusp", "--edge", "E1,E3")
    assert out.startswith("step 1: blow up (E1,E3) -> E0 (N=8, nu=7)")
    code, _, err = run("blowup", "--preset", "cusp", "--edge", "E1,E2")
    assert code == 3 and "E1" in err


def test_other_commands_run():
    for cmd in ("volume", "weil", "limit", "dl"):
        code, out, _ = run(cmd, "--preset", "cusp", "--json")
        assert code == 0 and json.loads(out)
    code, out, _ = run("limit", "--preset", "node")
    assert "(agrees)" in out


def test_error_exit_codes(tmp_path):
    assert run("zeta", "--preset", "nope")[0] == 2
    bad = tmp_path / "bad.json"
    bad.write_text(NODE_JSON.replace('"N": 1, "nu": 1}, {"id": "E2"', '"N": -1, "nu": 1}, {"id": "E2"'))
    code, _, err = run("zeta", "--config", str(bad))
    assert code == 2 and "N ≥ 1" in err
    nomu = NODE_JSON.replace('"N": 1, "nu": 1}, {', '"N": 1}, {')
    assert run("weil", "--config", "-", stdin=nomu)[0] == 3
    assert run("trace", "--config", "-", stdin=NODE_JSON, *["--d", "1"])[0] == 0


def test_parse_examples():
    c = parse_config(NODE_JSON)
    assert c == __import__("motzeta").from_dual_graph(preset("node").config)
    with pytest.raises(ValidationError) as exc:
        parse_config(NODE_JSON.replace('"N": 1, "nu": 1}, {"id": "E2"', '"N": -1, "nu": 1}, {"id": "E2"'))
    assert [v.rule for v in exc.value.violations] == ["N ≥ 1"]
    with pytest.raises(ValidationError) as exc:
        parse_config(NODE_JSON.replace('"nu": 1}, {"id": "E2"', '"nu": 1, "mu": 3}, {"id": "E2"'))
    assert [v.rule for v in exc.value.violations] == ["mu = nu − N"]


def test_parse_rejections():
    with pytest.raises(ParseError) as exc:
        parse_config(NODE_JSON.replace('"m": 1', '"m": 1, "extra": 0'))
    assert "extra" in str(exc.value)
    with pytest.raises(ParseError):
        parse_config(NODE_JSON.replace('"id": "E2"', '"id": "E1"'))
    with pytest.raises(ParseError):
        parse_config('{"m": 1, "m": 2, "components": []}')
    with pytest.raises(ParseError) as exc:
        parse_config('{\n  "m": 1,\n  "components": [}')
    assert exc.value.line == 3


@pytest.mark.parametrize("name", ["smooth_point", "node", "monomial(2,3)", "cusp"])
def test_round_trip(name):
    g = preset(name).config
    assert parse_config(render_config(g)) == g
    from motzeta import from_dual_graph

    c = from_dual_graph(g)
    assert parse_config(render_config(c)) == c


def test_verify_deterministic():
    a = run("verify", "--preset", "cusp", "--degree", "12", "--json")
    b = run("verify", "--preset", "cusp", "--degree", "12", "--json")
    assert a == b and a[0] == 0


def test_console_entry_point():
    out = subprocess.run([sys.executable, "-m", "motzeta", "trace", "--preset", "cusp", "--d", "2"], capture_output=True, text=True)
    assert out.returncode == 0 and out.stdout == "2\n"
