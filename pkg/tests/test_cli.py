"""End-to-end tests of the cq command line interface."""

import contextlib
import io
import json
import subprocess
import sys

from completequadrics import cli


def run(argv):
    out, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        try:
            code = cli.main(argv)
        except SystemExit as exc:
            code = exc.code
    return code, out.getvalue(), err.getvalue()


def run_json(argv):
    code, out, err = run(argv)
    assert code == 0, err
    return json.loads(out)


def test_canonical_example():
    data = run_json(["canonical", "--n", "3", "--basis", "H"])
    assert data["divisor"]["coeffs"] == ["-2", "-1", "-2"]
    assert data["schema"] == "cq/1"


def test_canonical_mixed_blowup_route():
    data = run_json(["canonical", "--n", "3", "--basis", "mixed", "--method", "blowup"])
    assert data["divisor"]["coeffs"] == ["-10", "5", "2"]


def test_chamber_example():
    data = run_json(["chamber", "--divisor", '{"basis":"H","coeffs":["1","1","1"]}'])
    assert data["chamber"] == 1
    assert data["base_locus"] == "empty"
    assert data["model"] == "X3"


def test_chamber_segment_midpoint():
    data = run_json(["chamber", "--segment", "1/2"])
    assert data["position"] == "wall H1,H3"
    assert data["model"] == "C/(Z/2)"
    assert data["certificate"] == {"pair(C12,D)": "0"}


def test_chamber_census_small():
    data = run_json(["chamber", "--census", "200", "--seed", "1"])
    assert data["all_eight_hit"] is True
    assert sum(data["chamber_counts"].values()) == 200


def test_schubert_point_degree():
    data = run_json(["schubert", "--grassmannian", "1,3", "--expr", "sigma1^4"])
    assert data["value"] == 2
    assert data["interpreted_as"] == "multiple of the point class"


def test_schubert_pairing_expression():
    data = run_json(
        ["schubert", "--grassmannian", "1,3", "--expr", "2*(sigma2+sigma1,1)*sigma1^2"]
    )
    assert data["value"] == 4


def test_schubert_class_output():
    data = run_json(["schubert", "--grassmannian", "1,3", "--expr", "sigma1*sigma1"])
    assert data["class"]["terms"] == {"2": 1, "1,1": 1}


def test_schubert_bigger_grassmannian():
    assert run_json(["schubert", "--grassmannian", "2,5", "--expr", "sigma1^9"])["value"] == 42


def test_chow_compound_identity():
    form = json.dumps([["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]])
    data = run_json(["chow", "--form", form, "--k", "2"])
    assert data["matrix"] == [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]]
    assert "lexicographic" in data["indexing"]


def test_chow_limit_support():
    q0 = json.dumps([["0", "1/2", "0", "0"], ["1/2", "0", "0", "0"],
                     ["0", "0", "0", "0"], ["0", "0", "0", "0"]])
    q1 = json.dumps([["0", "0", "0", "0"], ["0", "0", "0", "0"],
                     ["0", "0", "1", "0"], ["0", "0", "0", "1"]])
    data = run_json(["chow", "--form", q0, "--k", "2", "--limit-toward", q1])
    assert data["support"] == {"0,0": "1"}


def test_pencil_count():
    data = run_json(["pencil", "--n", "5", "--k", "2", "--seed", "9"])
    assert data["degenerations"] == 4


def test_pencil_verify_table():
    code, out, _ = run(["pencil", "--verify-table", "--seed", "2"])
    assert code == 0
    data = json.loads(out)
    assert data["all_ok"] is True
    assert len(data["entries"]) == 13
    assert all(e["count"] == e["pairing"] for e in data["entries"])


def test_cone_membership():
    data = run_json(["cone", "--divisor", '{"basis":"H","coeffs":["1","1","1"]}',
                     "--cone", "nef"])
    assert data["contains"] is True and data["interior"] is True


def test_pair_display_name():
    data = run_json(["pair", "--curve", "C1,2", "--divisor",
                     '{"basis":"H","coeffs":["4","-2","4"]}'])
    assert data["value"] == "-2"


def test_table_json_shape():
    data = run_json(["table"])
    assert len(data["rows"]) == 8
    assert all(len(r["entries"]) == 6 for r in data["rows"])
    gstar = next(r for r in data["rows"] if r["curve"] == "G*")
    assert gstar["entries"] == [3, 2, 1, 4, 0, 0]


def test_table_text_alignment():
    code, out, _ = run(["table", "--text"])
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 9
    assert lines[0].split() == ["H1", "H2", "H3", "E1", "E2", "E3", "covers"]
    assert lines[2].split() == ["G*", "3", "2", "1", "4", "0", "0", "X3"]


def test_verify_all_quick():
    code, out, _ = run(["verify-all", "--seed", "4", "--quick", "--json"])
    assert code == 0
    data = json.loads(out)
    assert data["all_passed"] is True
    assert len(data["checks"]) == 11


def test_repeated_runs_byte_identical():
    args = [
        ["table"],
        ["chamber", "--census", "60", "--seed", "3"],
        ["pencil", "--n", "4", "--k", "1", "--seed", "0"],
        ["schubert", "--grassmannian", "1,4", "--expr", "sigma1^6"],
    ]
    for argv in args:
        _, first, _ = run(argv)
        _, second, _ = run(argv)
        assert first == second


def test_error_exit_codes():
    for argv in (
        ["chamber", "--divisor", "not json"],
        ["chamber", "--divisor", '{"basis":"H","coeffs":["-1","0","0"]}'],
        ["pencil", "--n", "3"],
        ["schubert", "--grassmannian", "1,3", "--expr", "sigma3"],
        ["schubert", "--grassmannian", "1,3", "--expr", "sigma1 + 1"],
        ["pencil", "--n", "3", "--k", "3", "--seed", "0"],
    ):
        code, _, err = run(argv)
        assert code == 2, argv
    code, _, _ = run(["bogus"])
    assert code == 2


def test_console_script_wiring():
    proc = subprocess.run(
        [sys.executable, "-m", "completequadrics.cli", "canonical", "--n", "2"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["divisor"]["coeffs"] == ["-2", "-2"]
