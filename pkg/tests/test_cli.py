import json
import os
import subprocess
import sys

import pytest

from hopfish.cli import main
from hopfish.hopf import function_algebra_hopf, z2_cocycle_quasi
from hopfish.hypergroupoid import cyclic_group_tensor, yang_lee_tensor
from hopfish.serialize import algebra_to_json, dump_structure, matrix_to_json, rat

DOUBLED = {"n": 2, "e": [1, 0], "d": [[[1, 0], [0, 1]], [[0, 1], [2, 0]]]}


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def write(tmp_path, name, value):
    p = tmp_path / name
    p.write_text(value if isinstance(value, str) else json.dumps(value))
    return str(p)


@pytest.fixture
def yang_lee(tmp_path):
    return write(tmp_path, "yl.json", dump_structure(yang_lee_tensor(1)))


@pytest.fixture
def hopf_files(tmp_path):
    h = function_algebra_hopf(2)
    return {
        "--algebra": write(tmp_path, "a.json", algebra_to_json(h.algebra)),
        "--delta": write(tmp_path, "d.json", matrix_to_json(h.coproduct.matrix)),
        "--epsilon": write(tmp_path, "e.json", {"matrix": matrix_to_json(h.counit.matrix)}),
        "--antipode": write(tmp_path, "s.json", matrix_to_json(h.antipode.matrix)),
    }


def _flags(files, *keys):
    out = []
    for k in keys:
        out += [k, files[k]]
    return out


# ---------------------------------------------------------------------------
# verify


def test_verify_valid(capsys, yang_lee):
    code, out, _ = run(capsys, "verify", yang_lee)
    assert code == 0
    rep = json.loads(out)
    assert rep["verdict"]["valid"] is True and rep["exit_code"] == 0
    assert rep["verdict"]["sigma"] == [0, 1]
    assert list(rep["inputs"]) == [yang_lee]


def test_verify_failure_names_axiom(capsys, tmp_path):
    code, out, _ = run(capsys, "verify", write(tmp_path, "dbl.json", DOUBLED))
    assert code == 1
    v = json.loads(out)["verdict"]
    assert v["valid"] is False and v["axiom"] == "inversion" and v["witness"] == [1, 1]


def test_verify_negative_entry_is_input_error(capsys, tmp_path):
    text = '{"n": 1,\n "e": [1],\n "d": [[[-1]]]}'
    code, out, err = run(capsys, "verify", write(tmp_path, "neg.json", text))
    assert code == 2
    assert "line 3, column 10" in err and "d[0][0][0]" in err and "negative" in err
    assert json.loads(out)["exit_code"] == 2


@pytest.mark.parametrize("text,needle", [
    ('{"n": 2, "e": [1, 0], "d": [[[1, 0]], [[0, 1], [1, 1]]]}', "expected 2 entries"),
    ('{"n": 1, "e": [1], "d": [[[1.5]]]}', "expected an integer"),
    ('{"n": 1, "e": [1]}', "missing key 'd'"),
    ('{"n": 1, "e": [1], ', "line 1"),
])
def test_verify_malformed(capsys, tmp_path, text, needle):
    code, _, err = run(capsys, "verify", write(tmp_path, "bad.json", text))
    assert code == 2 and needle in err


def test_missing_file(capsys, tmp_path):
    code, _, err = run(capsys, "verify", str(tmp_path / "nope.json"))
    assert code == 2 and "cannot read" in err


# ---------------------------------------------------------------------------
# enumerate


def test_enumerate_text_and_json(capsys):
    code, out, _ = run(capsys, "enumerate", "--n", "2", "--max-mult", "3")
    assert code == 0 and "5 classes" in out
    code, out, _ = run(capsys, "enumerate", "--n", "2", "--max-mult", "1", "--mode", "sesqui", "--json")
    rep = json.loads(out)
    assert rep["verdict"] == {"count": 5, "complete": True}
    assert all(set(e) >= {"tensor", "is_groupoid", "fp_dims"} for e in rep["census"])


def test_enumerate_out_writes_census_array(capsys, tmp_path):
    path = str(tmp_path / "census.json")
    code, _, _ = run(capsys, "enumerate", "--n", "2", "--max-mult", "2", "--out", path)
    assert code == 0
    data = json.loads(open(path).read())
    assert isinstance(data, list) and len(data) == 4


def test_enumerate_node_limit_reports_incomplete(capsys):
    code, out, _ = run(capsys, "enumerate", "--n", "2", "--max-mult", "3", "--node-limit", "3", "--json")
    assert code == 1 and json.loads(out)["verdict"]["complete"] is False


def test_workers_do_not_change_output(capsys, monkeypatch):
    outs = []
    for w in ("1", "2"):
        monkeypatch.setenv("HOPFISH_WORKERS", w)
        outs.append(run(capsys, "enumerate", "--n", "2", "--max-mult", "2", "--json")[1])
    outs.append(run(capsys, "enumerate", "--n", "2", "--max-mult", "2", "--json", "--workers", "2")[1])
    assert json.loads(outs[0])["census"] == json.loads(outs[1])["census"] == json.loads(outs[2])["census"]
    assert outs[0] == outs[1]


# ---------------------------------------------------------------------------
# analyze


def test_analyze_yang_lee(capsys, yang_lee):
    code, out, _ = run(capsys, "analyze", "--in", yang_lee)
    assert code == 0
    assert "FPdim(1) in [1.618033988749, 1.618033988751]  irrational" in out
    assert "verdict: obstructed" in out
    code, out, _ = run(capsys, "analyze", "--in", yang_lee, "--json")
    rep = json.loads(out)
    assert rep["verdict"]["obstruction"] == "obstructed"
    iv = rep["fp_dimensions"][1]["interval"]
    assert iv["integer"] is None and iv["lo_decimal"] == "1.618033988749"


def test_analyze_group_unobstructed(capsys, tmp_path):
    path = write(tmp_path, "z3.json", dump_structure(cyclic_group_tensor(3)))
    rep = json.loads(run(capsys, "analyze", "--in", path, "--json")[1])
    assert rep["verdict"]["obstruction"] != "obstructed"
    assert [f["interval"]["integer"] for f in rep["fp_dimensions"]] == [1, 1, 1]
    assert rep["fp_multiplicative"] is True


# ---------------------------------------------------------------------------
# morita


def test_morita_z3(capsys):
    code, out, _ = run(capsys, "morita", "z3", "--r", "1", "--s", "2", "--t", "2")
    assert code == 0 and "(1, 4, 4)" in out and "verdict            hopfish" in out
    code, out, _ = run(capsys, "morita", "z3", "--r", "1", "--s", "1", "--t", "2", "--json")
    v = json.loads(out)["verdict"]
    assert code == 1 and v["verdict"] == "not hopfish" and v["S_block_dims"] == [1, 2, 2]


@pytest.mark.parametrize("argv", [
    ("morita", "z3", "--r", "0", "--s", "1", "--t", "1"),
    ("morita", "matrix", "--n", "2", "--group", "S3"),
])
def test_morita_refusals(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2 and err.startswith("error:")
    assert "error" in json.loads(out)


def test_morita_matrix_full(capsys):
    code, out, _ = run(capsys, "morita", "matrix", "--n", "2", "--group", "Z/2", "--full", "--json")
    v = json.loads(out)["verdict"]
    assert code == 0 and v["hopfish"] and v["hopfish_suite"]["ok"]
    assert v["dims"] == {"eps": 2, "delta": 32, "S": 8} and v["S_block_dims"] == [4, 4]


def test_morita_transport_structure(capsys, tmp_path):
    path = write(tmp_path, "z2.json", dump_structure(cyclic_group_tensor(2)))
    code, out, _ = run(capsys, "morita", "transport", "--in", path, "--json")
    assert code == 0 and json.loads(out)["verdict"]["hopfish"]
    bad = write(tmp_path, "dbl.json", DOUBLED)
    assert run(capsys, "morita", "transport", "--in", bad)[0] == 2


# ---------------------------------------------------------------------------
# hopf-check / quasi-hopf-check


@pytest.mark.parametrize("name,code", [("kZ2", 0), ("kZ3", 0), ("kZ4", 0), ("QZ2", 0), ("kZ3-wrong-antipode", 1)])
def test_hopf_check_examples(capsys, name, code):
    got, out, _ = run(capsys, "hopf-check", "--example", name)
    assert got == code
    assert ("all axioms hold" in out) == (code == 0)
    if code:
        assert "antipode_axiom" in out and "FAIL" in out


def test_hopf_check_files(capsys, hopf_files):
    code, out, _ = run(capsys, "hopf-check", *_flags(hopf_files, "--algebra", "--delta", "--epsilon", "--antipode"))
    assert code == 0 and "coassociativity" in out


def test_hopf_check_needs_antipode(capsys, hopf_files):
    code, _, err = run(capsys, "hopf-check", *_flags(hopf_files, "--algebra", "--delta", "--epsilon"))
    assert code == 2 and "--antipode" in err


def test_hopf_check_bad_algebra(capsys, tmp_path, hopf_files):
    files = dict(hopf_files)
    files["--algebra"] = write(tmp_path, "bad.json", {"dim": 2, "mult": [[[1, 0], [0, 1]], [[0, 1], [1, 0]]],
                                                     "unit": [1, 1]})
    code, _, err = run(capsys, "hopf-check", *_flags(files, "--algebra", "--delta", "--epsilon", "--antipode"))
    assert code == 2 and "not a unital associative algebra (unit fails" in err


@pytest.mark.parametrize("name,code", [("trivial", 0), ("cocycle", 0), ("negated-alpha", 1)])
def test_quasi_examples(capsys, name, code):
    got, out, _ = run(capsys, "quasi-hopf-check", "--example", name, "--json")
    assert got == code
    v = json.loads(out)["verdict"]
    assert v["ok"] == (code == 0)
    if code:
        assert "quasi_antipode_unit" in v["failed"]


def test_quasi_files(capsys, tmp_path, hopf_files):
    q = z2_cocycle_quasi()
    quasi = write(tmp_path, "q.json", {k: [rat(x) for x in getattr(q, k)] for k in ("phi", "phi_inv", "alpha", "beta")})
    argv = _flags(hopf_files, "--algebra", "--delta", "--epsilon", "--antipode") + ["--quasi", quasi]
    assert run(capsys, "quasi-hopf-check", *argv)[0] == 0
    assert run(capsys, "hopf-check", *argv)[0] == 0


# ---------------------------------------------------------------------------
# reports


def test_out_and_timing(capsys, tmp_path, yang_lee):
    path = str(tmp_path / "rep.json")
    run(capsys, "analyze", "--in", yang_lee, "--out", path)
    rep = json.loads(open(path).read())
    assert "timing_seconds" not in rep
    run(capsys, "analyze", "--in", yang_lee, "--out", path, "--timing")
    assert "timing_seconds" in json.loads(open(path).read())


def test_reports_are_byte_identical(tmp_path, yang_lee):
    cmds = [
        ["analyze", "--in", yang_lee, "--json"],
        ["morita", "z3", "--r", "1", "--s", "2", "--t", "2", "--json"],
        ["enumerate", "--n", "2", "--max-mult", "2", "--json"],
        ["quasi-hopf-check", "--example", "cocycle", "--json"],
    ]
    for argv in cmds:
        outs = [subprocess.run([sys.executable, "-m", "hopfish", *argv], capture_output=True, env=os.environ.copy(),
                               check=False).stdout for _ in range(2)]
        assert outs[0] == outs[1] and outs[0]


def test_version(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["--version"])
    assert exc.value.code == 0
    assert "hopfish" in capsys.readouterr().out


SAMPLES = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "samples")


def test_sample_files(capsys):
    def s(name):
        return os.path.join(SAMPLES, name)

    assert run(capsys, "verify", s("yang_lee.json"))[0] == 0
    assert run(capsys, "verify", s("doubled.json"))[0] == 1
    assert run(capsys, "verify", s("pair_groupoid2.json"))[0] == 0
    assert "unobstructed" in run(capsys, "analyze", "--in", s("cyclic3.json"))[1]
    maps = ["--algebra", s("kZ2_algebra.json"), "--delta", s("kZ2_delta.json"), "--epsilon", s("kZ2_epsilon.json"),
            "--antipode", s("kZ2_antipode.json")]
    assert run(capsys, "hopf-check", *maps)[0] == 0
    assert run(capsys, "quasi-hopf-check", *maps, "--quasi", s("kZ2_cocycle_quasi.json"))[0] == 0
