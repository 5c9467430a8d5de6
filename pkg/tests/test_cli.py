import json
import subprocess
import sys

import pytest

from toricface.cli import COMMANDS, main, parse_fan
from toricface.errors import NotAFan, NotPointed, ParseError

TWO_CONES = {"name": "two-cones", "ambient_dim": 2, "rays": [[0, 1], [2, 1], [-2, 1]], "maximal_cones": [[0, 1], [0, 2]]}
RAY = {"ambient_dim": 1, "rays": [[1]], "maximal_cones": [[0]]}
QUADRANTS = {"ambient_dim": 2, "rays": [[1, 0], [0, 1], [-1, 0], [0, -1]], "maximal_cones": [[0, 1], [2, 3]]}
RP2 = {
    "ambient_dim": 6,
    "rays": [[int(i == j) for j in range(6)] for i in range(6)],
    "maximal_cones": [[0, 1, 2], [0, 2, 3], [0, 3, 4], [0, 4, 5], [0, 5, 1],
                      [1, 2, 4], [2, 3, 5], [3, 4, 1], [4, 5, 2], [5, 1, 3]],
}


@pytest.fixture
def write(tmp_path):
    def _write(doc, name="fan.json"):
        p = tmp_path / name
        p.write_text(doc if isinstance(doc, str) else json.dumps(doc))
        return str(p)
    return _write


def run(args, capsys):
    code = main(args)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_parse_examples():
    assert len(parse_fan(json.dumps(RAY)).cones) == 2
    assert len(parse_fan(json.dumps(TWO_CONES)).cones) == 6
    inline = {"ambient_dim": 2, "maximal_cones": [[[0, 1], [2, 1]], [[0, 1], [-2, 1]]]}
    assert parse_fan(json.dumps(inline)).cones == parse_fan(json.dumps(TWO_CONES)).cones
    with pytest.raises(NotAFan):
        parse_fan(json.dumps({"ambient_dim": 2, "rays": [[1, 0], [1, 1], [0, 1]], "maximal_cones": [[0, 1], [0, 2]]}))


@pytest.mark.parametrize("doc,locus", [
    ("{not json", "line 1, column 2"),
    ("[]", "document"),
    (json.dumps({"rays": [], "maximal_cones": []}), "ambient_dim"),
    (json.dumps({"ambient_dim": 2, "rays": [[1, 0, 0]], "maximal_cones": [[0]]}), "rays[0]"),
    (json.dumps({"ambient_dim": 2, "rays": [[1, 0]], "maximal_cones": [[3]]}), "maximal_cones[0][0]"),
    (json.dumps({"ambient_dim": 2, "rays": [[0, 0]], "maximal_cones": [[0]]}), "rays[0]"),
    (json.dumps({"ambient_dim": 2, "rays": [[1, 0.5]], "maximal_cones": []}), "rays[0]"),
    (json.dumps({"ambient_dim": 2, "maximal_cones": [["a"]]}), "maximal_cones[0][0]"),
    (json.dumps({"ambient_dim": 1, "maximal_cones": [], "extra": 1}), "document"),
])
def test_parse_errors_carry_locus(doc, locus):
    with pytest.raises(ParseError) as info:
        parse_fan(doc)
    assert info.value.locus == locus


def test_non_pointed_input():
    with pytest.raises(NotPointed):
        parse_fan(json.dumps({"ambient_dim": 1, "rays": [[1], [-1]], "maximal_cones": [[0, 1]]}))


def test_clean_reports_shellable(write, capsys):
    code, out, _ = run(["clean", write(TWO_CONES), "--box", "6", "--format", "json"], capsys)
    doc = json.loads(out)
    assert code == 0
    assert doc["results"]["clean"]["verdict"] == "NotClean"
    assert doc["results"]["clean"]["shellable"] is True
    assert doc["box"] == 6 and any("[-6,6]" in c for c in doc["caveats"])


def test_omega_single_ray(write, capsys):
    code, out, _ = run(["omega", write(RAY), "--box", "3", "--format", "json"], capsys)
    assert code == 0
    assert json.loads(out)["results"]["omega"]["Q"]["nonzero"] == [[[1], 1], [[2], 1], [[3], 1]]


def test_validate_zero_fan(write, capsys):
    code, out, _ = run(["validate", write({"ambient_dim": 3, "maximal_cones": []})], capsys)
    assert code == 0 and "valid: yes" in out


def test_input_error_exit_status(write, capsys):
    code, out, err = run(["validate", write({"ambient_dim": 2, "rays": [[1, 0, 0]], "maximal_cones": []})], capsys)
    assert code == 1 and "ParseError" in err and out == ""
    code, out, _ = run(["analyze", write("{"), "--format", "json"], capsys)
    assert code == 1 and json.loads(out)["error"]["type"] == "ParseError"
    code, _, err = run(["analyze", "/nonexistent/fan.json"], capsys)
    assert code == 1 and "FileNotFoundError" in err


def test_budget_exit_status(write, capsys):
    path = write(RP2)
    code, out, _ = run(["shelling", path, "--budget", "2", "--format", "json"], capsys)
    assert code == 2 and json.loads(out)["results"]["shelling"]["verdict"] == "Unknown"
    code, _, _ = run(["shelling", path, "--budget", "2", "--lenient"], capsys)
    assert code == 0


def test_fields_side_by_side(write, capsys):
    code, out, _ = run(["analyze", write(RP2), "--field", "q", "--field", "fp:2", "--format", "json"], capsys)
    res = json.loads(out)["results"]["analysis"]
    assert code == 0
    assert res["Q"]["cohen_macaulay"]["verdict"] == "CohenMacaulay"
    f2 = res["F_2"]["cohen_macaulay"]
    assert f2["verdict"] == "NotCohenMacaulay" and f2["witness"]["cone"]["id"] == 0 and f2["witness"]["degree"] == 1


def test_not_cm_is_a_verdict(write, capsys):
    code, out, _ = run(["gorenstein", write(QUADRANTS), "--format", "json"], capsys)
    assert code == 0
    assert json.loads(out)["results"]["gorenstein"]["Q"]["verdict"] == "NotCohenMacaulay"


def test_localcoh_degree(write, capsys):
    code, out, _ = run(["localcoh", write(RAY), "--degree", "1", "--box", "2", "--format", "json"], capsys)
    assert json.loads(out)["results"]["local_cohomology"]["Q"]["nonzero"] == [[[-2], 1], [[-1], 1]]
    code, _, _ = run(["localcoh", write(RAY), "--degree", "5"], capsys)
    assert code == 1


def test_bad_field_flag(write, capsys):
    with pytest.raises(SystemExit):
        main(["analyze", write(RAY), "--field", "fp:4"])


@pytest.mark.parametrize("command", COMMANDS)
def test_every_command_is_deterministic(command, write, capsys):
    path = write(TWO_CONES)
    outputs = []
    for _ in range(2):
        code, out, _ = run([command, path, "--format", "json", "--box", "2"], capsys)
        assert code == 0
        outputs.append(out)
    assert outputs[0] == outputs[1]
    assert "seconds" not in json.loads(outputs[0])


def test_text_output_and_timing(write, capsys):
    code, out, _ = run(["all", write(TWO_CONES), "--box", "2", "--timing"], capsys)
    assert code == 0
    for word in ("shelling:", "semishelling:", "clean:", "verdict: Shellable", "seconds:"):
        assert word in out


def test_stdin_and_module_entry():
    proc = subprocess.run(
        [sys.executable, "-m", "toricface", "validate", "-", "--format", "json"],
        input=json.dumps(TWO_CONES), capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["fan"]["f_vector"] == [1, 3, 2]
