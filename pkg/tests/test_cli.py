import json
import os
import subprocess
import sys

import pytest

RUN = [sys.executable, "-m", "rankloci.cli"]


def run_cli(*args, env=None):
    e = dict(os.environ)
    if env:
        e.update(env)
    return subprocess.run(RUN + list(args), capture_output=True, text=True, env=e)


def test_binary_rank_roundtrip():
    out = run_cli("binary-rank", "--form", '{"degree":5,"coeffs":["0","1","0","0","0","0"]}')
    assert out.returncode == 0
    doc = json.loads(out.stdout)
    assert doc["command"] == "binary-rank"
    assert doc["result"]["rank"] == 5
    assert doc["result"]["border_rank"] == 2
    assert doc["fixture_version"] == "1"


def test_pencil_rank_command():
    out = run_cli("pencil-rank", "--m1", '[["1","0"],["0","1"]]', "--m2", '[["0","1"],["0","0"]]')
    assert out.returncode == 0
    doc = json.loads(out.stdout)
    assert doc["result"]["rank"] == 3
    assert doc["result"]["invariants"]["invariant_factors"] == [
        {"degree": 2, "coeffs": ["1", "0", "0"]}
    ]


def test_waring_command():
    out = run_cli("waring", "--n", "3", "--d", "4")
    doc = json.loads(out.stdout)
    assert doc["result"]["generic_rank"] == 6
    assert doc["result"]["max_rank_bounds"]["known_exact"] == 7


def test_concise_command():
    form = '{"n":3,"d":3,"terms":{"[2,1,0]":"1","[0,2,1]":"1"}}'
    doc = json.loads(run_cli("concise", "--form", form).stdout)
    assert doc["result"]["concise"] is True
    assert doc["result"]["essential_count"] == 3


def test_verify_identity_command():
    doc = json.loads(run_cli("verify-identity", "--id", "reznick4", "--n", "4").stdout)
    assert doc["result"]["verified"] is True
    assert doc["result"]["rank_bound"] == 16


def test_orbit_dim_both_modes():
    pencil = json.dumps({
        "m1": [["1", "0", "0", "0"], ["0", "1", "0", "0"], ["0", "0", "1", "0"], ["0", "0", "0", "1"]],
        "m2": [["0", "0", "1", "0"], ["0", "0", "0", "1"], ["0", "0", "0", "0"], ["0", "0", "0", "0"]],
    })
    doc = json.loads(run_cli("orbit-dim", "--pencil", pencil).stdout)
    assert doc["result"]["stabilizer_dim"] == 11
    assert doc["result"]["projective_orbit_dim"] == 24

    form = '{"n":3,"d":3,"terms":{"[2,1,0]":"1","[0,2,1]":"1"}}'
    doc = json.loads(run_cli("orbit-dim", "--form", form).stdout)
    assert doc["result"]["projective_orbit_dim"] == 6


def test_t244_classify_tensor_form():
    tensor = json.dumps([
        [["1", "0", "0", "0"], ["0", "1", "0", "0"], ["0", "0", "1", "0"], ["0", "0", "0", "1"]],
        [["0", "1", "0", "0"], ["0", "0", "0", "0"], ["0", "0", "1", "0"], ["0", "0", "0", "-1"]],
    ])
    doc = json.loads(run_cli("t244", "classify", "--tensor", tensor).stdout)
    assert doc["result"]["orbit_id"] == "T5"
    assert doc["result"]["rank"] == 5
    assert doc["result"]["locus"] == "W5"
    assert doc["result"]["discriminant"] == "0"


def test_t244_nesting_seeded():
    doc = json.loads(run_cli("t244", "nesting", "--seed", "7", "--trials", "5").stdout)
    assert doc["seed"] == 7
    assert doc["result"]["t6_plus_rank1"]["trials"] == 5


def test_reproduce_commands():
    doc = json.loads(run_cli("reproduce", "table1").stdout)
    assert doc["result"]["all_match"] is True
    assert len(doc["result"]["rows"]) == 14
    doc = json.loads(run_cli("reproduce", "wm-dims", "--n", "2").stdout)
    assert doc["result"]["rows"][0]["projective_orbit_dim"] == 24


def test_byte_identical_determinism():
    args = ("t244", "nesting", "--seed", "3", "--trials", "4")
    a = run_cli(*args)
    b = run_cli(*args)
    assert a.stdout == b.stdout
    assert a.stdout.encode() == b.stdout.encode()


def test_table_output():
    out = run_cli("reproduce", "table1", "--output", "table")
    assert out.returncode == 0
    assert "all_match: True" in out.stdout


def test_exit_code_2_on_malformed_input():
    assert run_cli("binary-rank", "--form", "{not json").returncode == 2
    assert run_cli("binary-rank", "--form", '{"degree":2,"coeffs":["1"]}').returncode == 2
    assert run_cli("waring", "--n", "3").returncode == 2  # missing --d
    assert run_cli("orbit-dim").returncode == 2  # neither --pencil nor --form
    bad_rat = '{"degree":1,"coeffs":["1","0.5"]}'
    assert run_cli("binary-rank", "--form", bad_rat).returncode == 2


def test_exit_code_3_on_fixture_violation(tmp_path):
    # corrupt fixture: wrong orbit dimension fails the startup cross-check
    import rankloci.t244 as t244

    raw = json.loads(t244._fixture_text())
    raw["entries"][0]["dim"] = 99
    (tmp_path / "table1.json").write_text(json.dumps(raw))
    tensor = json.dumps([
        [["1", "0", "0", "0"], ["0", "1", "0", "0"], ["0", "0", "1", "0"], ["0", "0", "0", "1"]],
        [["0", "1", "0", "0"], ["0", "0", "0", "0"], ["0", "0", "1", "0"], ["0", "0", "0", "-1"]],
    ])
    out = run_cli("t244", "classify", "--tensor", tensor,
                  env={"RANKLOCI_FIXTURES": str(tmp_path)})
    assert out.returncode == 3
    dump = json.loads(out.stderr)
    assert "details" in dump


def test_exit_code_2_matrix_extra_cases():
    # wrong pencil shape for t244
    bad = run_cli("t244", "classify",
                  "--m1", '[["1","0","0"],["0","1","0"]]',
                  "--m2", '[["0","1","0"],["0","0","1"]]')
    assert bad.returncode == 2
    # both --pencil and --form
    assert run_cli("orbit-dim", "--pencil", '{"m1":[["1"]],"m2":[["1"]]}',
                   "--form", '{"n":1,"d":1,"terms":{"[1]":"1"}}').returncode == 2
    # tensor that is not a 2-slice array
    assert run_cli("t244", "classify", "--tensor", '[[["1"]]]').returncode == 2
    # mismatched m1/m2 shapes
    assert run_cli("pencil-rank", "--m1", '[["1","0"]]', "--m2", '[["1"]]').returncode == 2


def test_classify_determinism():
    tensor = json.dumps([
        [["1", "0", "0", "0"], ["0", "1", "0", "0"], ["0", "0", "1", "0"], ["0", "0", "0", "1"]],
        [["0", "0", "1", "0"], ["0", "0", "0", "1"], ["0", "0", "0", "0"], ["0", "0", "0", "0"]],
    ])
    a = run_cli("t244", "classify", "--tensor", tensor)
    b = run_cli("t244", "classify", "--tensor", tensor)
    assert a.stdout == b.stdout and a.returncode == 0
