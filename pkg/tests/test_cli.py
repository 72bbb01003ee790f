"""End-to-end tests for the command line interface, via cli.run."""

import json
import re

import pytest

from pathrw.cli import run
from pathrw.rewrite import normalize, term_of_word
from pathrw.spaces import builtin
from pathrw.syntax import parse_path

# rule name, optional (relation), @ position, optional [payload]
WIRE_LINE = re.compile(
    r"^[a-z_]+(\(\w+\))? @ (root|\d+(\.\d+)*)( \[.+\])?$"
)

STRIP_FILE = """\
# two circles joined by a crossing path
point p
point q
gen c : p -> q
gen u : p -> p
rel uu : u * u = refl(p)
base p
"""


@pytest.fixture
def strip_path(tmp_path):
    f = tmp_path / "strip.space"
    f.write_text(STRIP_FILE)
    return str(f)


class TestNormalize:
    def test_plain_output_is_the_normal_form(self):
        assert run(["normalize", "--space", "torus", "b * a * b * ~a"]) == (0, "b * b")
        assert run(["normalize", "--space", "circle", "a * ~a"]) == (0, "refl")

    def test_trace_lines_then_normal_form(self):
        code, text = run(["normalize", "--space", "klein", "--emit-trace", "b * a"])
        assert code == 0
        lines = text.splitlines()
        assert lines[-1] == "a * ~b"
        steps = lines[:-1]
        assert steps, "a rewrite this long must take steps"
        for line in steps:
            assert WIRE_LINE.match(line), line

    def test_trace_mentions_relations_by_name(self):
        _, text = run(["normalize", "--space", "torus", "--emit-trace", "b * a"])
        assert "relation_bwd(torusComm) @ root" in text.splitlines()

    def test_json_shape(self):
        code, text = run(["normalize", "--space", "torus", "--json", "b * a"])
        assert code == 0
        obj = json.loads(text)
        assert set(obj) == {"cmd", "space", "input", "result", "trace"}
        assert obj["cmd"] == "normalize"
        assert obj["space"] == "torus"
        assert obj["input"] == "b * a"
        assert obj["result"]["normal_form"] == "a * b"
        assert obj["result"]["letters"] == [["a", 1], ["b", 1]]
        assert obj["result"]["src"] == "pt" and obj["result"]["tgt"] == "pt"
        assert obj["trace"] is None

    def test_json_trace_is_a_list_when_asked(self):
        _, text = run(
            ["normalize", "--space", "torus", "--json", "--emit-trace", "b * a"]
        )
        obj = json.loads(text)
        assert obj["trace"] == ["relation_bwd(torusComm) @ root"]


class TestEqual:
    def test_equal_pair_exits_zero(self):
        assert run(["equal", "--space", "klein", "b * a", "a * ~b"]) == (0, "equal")

    def test_unequal_pair_exits_one(self):
        assert run(["equal", "--space", "klein", "b * a", "a * b"]) == (1, "not-equal")

    def test_oracle_reports_search_effort(self):
        code, text = run(
            ["equal", "--space", "circle", "--oracle", "a * ~a", "refl"]
        )
        assert code == 0
        assert text.startswith("equal (searched ")

    def test_oracle_not_equal(self):
        code, text = run(["equal", "--space", "circle", "--oracle", "a", "a * a"])
        assert code == 1
        assert text.startswith("not-equal")

    def test_oracle_undecided_exits_one(self):
        code, text = run(
            [
                "equal", "--space", "klein", "--oracle",
                "--max-states", "3", "b * a", "a * ~b",
            ]
        )
        assert code == 1
        assert text.startswith("undecided")

    def test_json_result_is_a_plain_verdict(self):
        code, text = run(
            ["equal", "--space", "torus", "--json", "a * b", "b * a"]
        )
        assert code == 0
        obj = json.loads(text)
        assert set(obj) == {"cmd", "space", "input", "result", "trace"}
        assert obj["result"] == "equal"
        assert obj["input"] == ["a * b", "b * a"]


class TestEncodeDecode:
    def test_winding_numbers(self):
        assert run(["encode", "--space", "circle", "a * a * a"]) == (0, "3")
        assert run(["encode", "--space", "circle", "~a * ~a"]) == (0, "-2")

    def test_pair_values(self):
        assert run(["encode", "--space", "torus", "b * a * b"]) == (0, "(1, 2)")
        assert run(["encode", "--space", "klein", "b * a"]) == (0, "(1, -1)")

    def test_decode_round_trips_through_text(self):
        assert run(["decode", "--space", "torus", "(2, -1)"]) == (0, "a * a * ~b")
        assert run(["decode", "--space", "circle", "-2"]) == (0, "~a * ~a")
        assert run(["decode", "--space", "rp2", "1"]) == (0, "α")
        assert run(["decode", "--space", "rp2", "0"]) == (0, "refl")

    def test_decoded_text_reparses_to_the_same_value(self):
        for space_name, value in (
            ("circle", "4"),
            ("torus", "(-3, 2)"),
            ("klein", "(2, -2)"),
            ("rp2", "1"),
        ):
            _, path_text = run(["decode", "--space", space_name, value])
            code, round_tripped = run(["encode", "--space", space_name, path_text])
            assert code == 0
            assert round_tripped == value

    def test_encode_json_carries_the_tag(self):
        _, text = run(["encode", "--space", "klein", "--json", "b * a"])
        obj = json.loads(text)
        assert obj["result"] == {"tag": "ZSemidirectZ", "value": "(1, -1)"}


class TestCheck:
    def test_builtin_space_passes(self):
        code, text = run(
            [
                "check", "--space", "circle", "--seed", "1",
                "--samples", "5", "--size", "6", "--max-states", "4000",
            ]
        )
        assert code == 0, text
        lines = text.splitlines()
        assert lines[-1] == "all checks passed"
        assert all(line.startswith("PASS ") for line in lines[:-1])

    def test_tagged_space_runs_group_suites(self):
        _, text = run(
            [
                "check", "--space", "rp2", "--json", "--seed", "2",
                "--samples", "4", "--size", "5",
            ]
        )
        obj = json.loads(text)
        names = [c["name"] for c in obj["result"]["checks"]]
        assert "group-round-trip" in names
        assert "homomorphism" in names
        assert obj["result"]["passed"] is True
        assert len(names) == 8


class TestSpaces:
    def test_lists_every_builtin(self):
        code, text = run(["spaces"])
        assert code == 0
        for name in ("circle", "cylinder", "mobius", "torus", "klein", "rp2"):
            assert name in text

    def test_json_rows(self):
        _, text = run(["spaces", "--json"])
        obj = json.loads(text)
        assert set(obj) == {"cmd", "space", "input", "result", "trace"}
        rows = obj["result"]
        assert [r["name"] for r in rows] == [
            "circle", "cylinder", "mobius", "torus", "klein", "rp2",
        ]
        torus_row = rows[3]
        assert torus_row["relations"] == ["torusComm"]
        assert torus_row["group"] == "ZxZ"
        cyl_row = rows[1]
        assert cyl_row["points"] == ["b0", "b1"]
        assert cyl_row["basepoint"] == "b0"


class TestSpaceFiles:
    def test_normalize_in_a_loaded_space(self, strip_path):
        assert run(
            ["normalize", "--space-file", strip_path, "c * ~c * u"]
        ) == (0, "u")

    def test_relations_reach_the_oracle_but_not_normal_forms(self, strip_path):
        # Free normal forms ignore the uu relation; the search applies it.
        code, _ = run(["equal", "--space-file", strip_path, "u * u", "refl(p)"])
        assert code == 1
        code, text = run(
            ["equal", "--space-file", strip_path, "--oracle", "u * u", "refl(p)"]
        )
        assert code == 0, text

    def test_check_suites_run_without_a_tag(self, strip_path):
        code, text = run(
            [
                "check", "--space-file", strip_path, "--json",
                "--samples", "4", "--size", "5",
            ]
        )
        assert code == 0, text
        obj = json.loads(text)
        names = [c["name"] for c in obj["result"]["checks"]]
        assert "group-round-trip" not in names
        assert len(names) == 6

    def test_encode_refuses_untagged_spaces(self, strip_path):
        code, text = run(["encode", "--space-file", strip_path, "u"])
        assert code == 2
        assert "error:" in text

    def test_decode_refuses_untagged_spaces(self, strip_path):
        code, text = run(["decode", "--space-file", strip_path, "1"])
        assert code == 2


class TestErrorExits:
    def test_unknown_space(self):
        code, text = run(["normalize", "--space", "pretzel", "a"])
        assert code == 2
        assert "pretzel" in text

    def test_space_required(self):
        code, _ = run(["normalize", "a"])
        assert code == 2

    def test_both_space_flags_rejected(self, strip_path):
        code, _ = run(
            ["normalize", "--space", "circle", "--space-file", strip_path, "a"]
        )
        assert code == 2

    def test_parse_error_in_expression(self):
        code, text = run(["normalize", "--space", "circle", "a * * a"])
        assert code == 2
        assert "error:" in text

    def test_unknown_generator(self):
        code, _ = run(["normalize", "--space", "circle", "z"])
        assert code == 2

    def test_missing_space_file(self):
        code, _ = run(["normalize", "--space-file", "/nonexistent/x.space", "a"])
        assert code == 2

    def test_malformed_group_value(self):
        code, _ = run(["decode", "--space", "torus", "whatever"])
        assert code == 2
        code, _ = run(["decode", "--space", "rp2", "7"])
        assert code == 2

    def test_argparse_failures_exit_two(self):
        code, _ = run([])
        assert code == 2
        code, _ = run(["normalize"])
        assert code == 2
        code, _ = run(["no-such-command"])
        assert code == 2

    def test_endpoint_mismatch_is_reported(self):
        code, text = run(["equal", "--space", "cylinder", "s", "l0"])
        assert code == 2
        assert "error:" in text


class TestOutputsReplay:
    def test_normal_form_text_reparses_to_the_same_class(self):
        # The printed normal form is itself a valid input naming the same path.
        for space_name, expr in (
            ("torus", "b * a * ~b * a"),
            ("klein", "a * b * a"),
            ("cylinder", "s * l1 * ~s * l0"),
        ):
            space = builtin(space_name)
            code, text = run(["normalize", "--space", space_name, expr])
            assert code == 0
            original = normalize(space, parse_path(space, expr))
            reparsed = normalize(space, parse_path(space, text))
            assert reparsed == original
