import io
import json
import random

import pytest
from hypothesis import given, settings, strategies as st

from eucgb.cli import run
from eucgb.oracles import random_element
from eucgb.parsing import format_element, parse_element

from helpers import LEX, QXY, ZXY


def call(tmp_path, command, text, *flags, name="input.txt"):
    path = tmp_path / name
    path.write_text(text)
    out, err = io.StringIO(), io.StringIO()
    status = run([command, str(path), *flags], stdout=out, stderr=err)
    return status, out.getvalue(), err.getvalue()


SYSTEM = json.dumps({
    "ring": {"coeff": "Z", "vars": ["x", "y"]},
    "order": {"type": "lex"},
    "matrix": [["10*y", "0", "4*x"]],
    "rhs": ["4*x^3"],
})


class TestCommands:
    def test_solve_example_system(self, tmp_path):
        status, out, _ = call(tmp_path, "solve", SYSTEM, name="sys.json")
        assert status == 0
        assert out.splitlines() == ["solution: (0, 0, x^2)", "kernel:", "(2*x, 0, -5*y)", "(0, 1, 0)"]

    def test_solve_text_last_column_is_rhs(self, tmp_path):
        status, out, _ = call(tmp_path, "solve", "(10*y, 0, 4*x, 4*x^3)\n")
        assert status == 0 and out.startswith("solution: (0, 0, x^2)\n")

    def test_solve_no_solution(self, tmp_path):
        status, out, _ = call(tmp_path, "solve", "(2, x)\n")
        assert status == 1
        assert out.splitlines()[:2] == ["no solution", "colon ideal: 2"]

    def test_gb_single(self, tmp_path):
        assert call(tmp_path, "gb", "2*x\n") == (0, "2*x\n", "")

    def test_gb_two_generators(self, tmp_path):
        status, out, _ = call(tmp_path, "gb", "# generators\n2*x\n\n3*y\n")
        assert status == 0 and out.splitlines() == ["x*y", "2*x", "3*y"]

    def test_gb_no_coprime_skip_same_result(self, tmp_path):
        a = call(tmp_path, "gb", "x^2 + y\ny^3 + 1\n")
        b = call(tmp_path, "gb", "x^2 + y\ny^3 + 1\n", "--no-coprime-skip")
        assert a == b

    def test_hnf(self, tmp_path):
        assert call(tmp_path, "hnf", "(4, 1)\n(6, 1)\n") == (0, "[[2,0],[0,1]]\n", "")

    def test_hnf_rejects_rationals(self, tmp_path):
        assert call(tmp_path, "hnf", "(4, 1)\n", "--ring", "Q")[0] == 2

    def test_rref(self, tmp_path):
        assert call(tmp_path, "rref", "[[2, 4], [1, 3]]", name="m.json") == (0, "[[1,0],[0,1]]\n", "")
        assert call(tmp_path, "rref", "(1, 2)\n(2, 4)\n")[1] == "[[1,2]]\n"

    def test_gnf(self, tmp_path):
        text = "\n".join(["(-4*x^3, 1, 0, 0, 0)", "(10*y, 0, 1, 0, 0)", "(0, 0, 0, 1, 0)", "(4*x, 0, 0, 0, 1)"])
        status, out, _ = call(tmp_path, "gnf", text)
        assert status == 0
        assert out.splitlines() == [
            "(2*x*y, 0, x, 0, -2*y)", "(4*x, 0, 0, 0, 1)", "(10*y, 0, 1, 0, 0)",
            "(0, 1, 0, 0, x^2)", "(0, 0, 2*x, 0, -5*y)", "(0, 0, 0, 1, 0)",
        ]

    def test_kernel(self, tmp_path):
        assert call(tmp_path, "kernel", "(10*y, 0, 4*x)\n")[1] == "(2*x, 0, -5*y)\n(0, 1, 0)\n"

    def test_member(self, tmp_path):
        assert call(tmp_path, "member", "x*y\n2*x\n3*y\n") == (0, "true\n", "")
        assert call(tmp_path, "member", "x\n2*x\n3*y\n") == (1, "false\n", "")

    def test_divide(self, tmp_path):
        status, out, _ = call(tmp_path, "divide", "(10*x^2*y^2 + y, 0, x)\n(x - 2*y, 1, 0)\n")
        assert status == 0
        lines = out.splitlines()
        assert lines[0].startswith("q1: ") and lines[-1].startswith("remainder: ")

    def test_spoly(self, tmp_path):
        status, out, _ = call(tmp_path, "spoly", "(10*x^2*y^2 + y, 0, x)\n(4*x^3*y + x^2, 1, 0)\n")
        assert (status, out) == (0, "(2*x^3*y^2 - 2*x^2*y + x*y, -2*y, x^2)\n")

    def test_vars_flag_changes_order(self, tmp_path):
        assert call(tmp_path, "gb", "x + y\n", "--vars", "y,x")[1] == "y + x\n"

    def test_matrix_order_file(self, tmp_path):
        (tmp_path / "ord.json").write_text("[[1, 1], [1, 0]]")
        status, out, _ = call(tmp_path, "gb", "x + y^2\n", "--order", f"matrix:{tmp_path / 'ord.json'}")
        assert (status, out) == (0, "y^2 + x\n")


class TestOutput:
    def test_json_mirrors_input(self, tmp_path):
        status, out, _ = call(tmp_path, "solve", SYSTEM, "--format", "json", name="sys.json")
        doc = json.loads(out)
        assert status == 0
        assert doc["matrix"] == [["10*y", "0", "4*x"]] and doc["rhs"] == ["4*x^3"]
        assert doc["result"] == {"solvable": True, "particular": "(0, 0, x^2)",
                                 "kernel": ["(2*x, 0, -5*y)", "(0, 1, 0)"]}

    def test_deterministic(self, tmp_path):
        runs = {call(tmp_path, "gb", "6*x*y - 4\n4*x^2 + y\n2*y^2 - x\n") for _ in range(3)}
        assert len(runs) == 1

    def test_trace(self, tmp_path, monkeypatch):
        monkeypatch.setenv("GB_TRACE", "1")
        status, out, err = call(tmp_path, "gb", "2*x\n3*y\n")
        assert status == 0 and "augment" in err
        monkeypatch.delenv("GB_TRACE")
        assert call(tmp_path, "gb", "2*x\n3*y\n")[2] == ""


class TestErrors:
    def test_parse_error_location(self, tmp_path):
        status, out, err = call(tmp_path, "gb", "2*x\nx + * y\n")
        assert status == 2 and out == ""
        assert "input.txt:2:" in err

    def test_bad_json(self, tmp_path):
        status, _, err = call(tmp_path, "gb", '{"matrix": [', name="bad.json")
        assert status == 2 and "bad.json:1:" in err

    def test_missing_file(self, tmp_path):
        err = io.StringIO()
        assert run(["gb", str(tmp_path / "nope.txt")], stdout=io.StringIO(), stderr=err) == 2

    def test_shape_mismatch(self, tmp_path):
        text = json.dumps({"matrix": [["1", "x"]], "rhs": ["1", "2"]})
        status, _, err = call(tmp_path, "solve", text, name="s.json")
        assert status == 2 and "1x2" in err

    def test_mixed_ranks(self, tmp_path):
        assert call(tmp_path, "gb", "(x, 1)\nx\n")[0] == 2

    def test_unknown_command(self):
        assert run(["frobnicate", "x"], stdout=io.StringIO(), stderr=io.StringIO()) == 2

    def test_spoly_arity(self, tmp_path):
        assert call(tmp_path, "spoly", "x\n")[0] == 2


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 10**6), st.sampled_from([ZXY, QXY]), st.integers(1, 3))
def test_print_parse_round_trip(seed, ring, rank):
    f = random_element(random.Random(seed), ring, rank)
    assert parse_element(format_element(f, LEX), ring) == f
