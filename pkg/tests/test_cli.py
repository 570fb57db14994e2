import json

import pytest

from asx.casev import casev_spec
from asx.cli import run
from asx.params import render_params

M5 = render_params(casev_spec(5).spec)

CUBE = """\
format: asx-params v1
d: 3
field: Q
c: 1 2 3
a: 0 0 0
b: 3 2 1
"""


@pytest.fixture
def m5_file(tmp_path):
    p = tmp_path / "casev-m5.params"
    p.write_text(M5)
    return str(p)


@pytest.fixture
def cube_file(tmp_path):
    p = tmp_path / "cube.params"
    p.write_text(CUBE)
    return str(p)


class TestCheck:
    def test_infeasible_m5(self, m5_file, capsys):
        code = run(["check", m5_file])
        out = capsys.readouterr().out
        assert code == 1
        assert "intersection-integrality" in out
        assert "72/7" in out
        assert "verdict: infeasible" in out

    def test_feasible_cube(self, cube_file, capsys):
        code = run(["check", cube_file])
        out = capsys.readouterr().out
        assert code == 0
        assert "verdict: feasible" in out

    def test_json_report_contains_exact_strings(self, m5_file, capsys):
        code = run(["--report", "json", "check", m5_file])
        payload = json.loads(capsys.readouterr().out)
        assert code == 1
        assert payload["command"] == "check"
        assert payload["verdict"] == "infeasible"
        integ = [c for c in payload["checks"] if c["name"] == "intersection-integrality"]
        assert integ and integ[0]["pass"] is False and "72/7" in integ[0]["witness"]
        assert payload["data"]["multiplicities"] == ["1", "5", "10", "10", "25", "5"]

    def test_missing_file(self, capsys):
        assert run(["check", "/nonexistent/x.params"]) == 2

    def test_malformed_file(self, tmp_path, capsys):
        p = tmp_path / "bad.params"
        p.write_text("format: asx-params v1\nd: nope\n")
        assert run(["check", str(p)]) == 2

    def test_zero_c_entry(self, tmp_path, capsys):
        p = tmp_path / "zero.params"
        p.write_text(M5.replace("c: 1 2 5/3 4/3 5", "c: 1 0 5/3 4/3 5"))
        assert run(["check", str(p)]) == 2

    def test_max_d_guard(self, m5_file, capsys):
        assert run(["check", m5_file, "--max-d", "4"]) == 2

    def test_quadratic_field_file_runs_tensor_checks(self, tmp_path, capsys):
        p = tmp_path / "quad.params"
        p.write_text(
            "format: asx-params v1\nd: 2\nfield: Q(sqrt 5)\n"
            "c: 1 1\na: 0 1\nb: 2 1\n"
        )
        code = run(["check", str(p)])
        out = capsys.readouterr().out
        assert code == 0
        assert "krein-column-sums" in out


class TestOrderings:
    def test_m5(self, m5_file, capsys):
        code = run(["orderings", m5_file])
        out = capsys.readouterr().out
        assert code == 0
        assert "2 found" in out
        assert "(0,1,2,3,4,5)  type: reference" in out
        assert "(0,5,3,2,4,1)  type: V" in out

    def test_json(self, m5_file, capsys):
        run(["--report", "json", "orderings", m5_file])
        payload = json.loads(capsys.readouterr().out)
        assert payload["data"]["orderings"] == [
            {"sigma": "(0,1,2,3,4,5)", "type": "reference"},
            {"sigma": "(0,5,3,2,4,1)", "type": "V"},
        ]


class TestFuse:
    def test_case_v_partition(self, m5_file, capsys):
        code = run(["fuse", m5_file, "--partition", "0|1,5|2,3|4"])
        out = capsys.readouterr().out
        assert code == 0
        assert "fused multiplicities: 1 10 20 25" in out

    def test_invalid_partition(self, m5_file, capsys):
        assert run(["fuse", m5_file, "--partition", "0,1|2,3|4,5"]) == 2

    def test_partition_not_covering(self, m5_file, capsys):
        assert run(["fuse", m5_file, "--partition", "0|1,2"]) == 2


class TestCaseV:
    def test_search(self, capsys):
        code = run(["casev", "--search-max", "200"])
        assert code == 0
        assert capsys.readouterr().out.strip() == "1 5"

    def test_search_bad_bound(self, capsys):
        assert run(["casev", "--search-max", "0"]) == 2

    def test_no_mode(self, capsys):
        assert run(["casev"]) == 2

    def test_symbolic_exit_code_reflects_the_documented_defect(self, capsys):
        code = run(["casev", "--symbolic"])
        out = capsys.readouterr().out
        assert code == 3
        assert "step 1 [ok]" in out
        assert "step 7 [ok]" in out
        assert "step 5 [DOES NOT VERIFY]" in out

    def test_reject(self, capsys):
        code = run(["casev", "--reject", "--search-max", "500"])
        out = capsys.readouterr().out
        assert code == 3  # symbolic branch carries the documented defect
        assert "m = 5 rejected" in out and "72/7" in out
        assert "m = 1 rejected" in out
        assert "nonexistence verified on the numeric branch" in out

    def test_reject_json(self, capsys):
        code = run(["--report", "json", "casev", "--reject", "--search-max", "500"])
        payload = json.loads(capsys.readouterr().out)
        assert payload["data"]["survivors"] == [1, 5]
        assert "72/7" in payload["data"]["rejections"]["5"]


def test_approx_hint(tmp_path, capsys):
    p = tmp_path / "quad.params"
    p.write_text(
        "format: asx-params v1\nd: 2\nfield: Q(sqrt 5)\n"
        "c: 1 1\na: 0 1\nb: 2 1\n"
    )
    run(["--approx", "fuse", str(p), "--partition", "0|1,2"])
    out = capsys.readouterr().out
    assert "fused multiplicities" in out


def test_json_and_text_share_exact_strings(m5_file, capsys):
    run(["check", m5_file])
    text = capsys.readouterr().out
    run(["--report", "json", "check", m5_file])
    payload = json.loads(capsys.readouterr().out)
    integ = next(c for c in payload["checks"] if c["name"] == "intersection-integrality")
    for fragment in integ["witness"].split("; ")[:5]:
        assert fragment in text


def test_help_paths(capsys):
    assert run([]) == 2
    assert run(["--help"]) == 0
    capsys.readouterr()
    assert run(["nonsense"]) == 2
