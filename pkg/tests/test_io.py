"""Tests for the bugyi.certidom.io module."""

import json

from pytest import mark

from bugyi.certidom import io


params = mark.parametrize


def test_dump_json_is_stable() -> None:
    first = io.dump_json({"b": [2, 1], "a": {"z": None, "y": True}})
    second = io.dump_json({"a": {"y": True, "z": None}, "b": [2, 1]})
    assert first == second
    assert json.loads(first)["b"] == [2, 1]


def test_with_schema_leads_the_payload() -> None:
    assert list(io.with_schema({"rows": []})) == ["schema", "rows"]
    assert io.with_schema({})["schema"] == 1


@params(
    "rows,expected",
    [
        ([], "x\ty\n"),
        ([[1, 2]], "x\ty\n1\t2\n"),
        ([[None, False]], "x\ty\n-\tfalse\n"),
    ],
)
def test_format_tsv(rows: list, expected: str) -> None:
    assert io.format_tsv(["x", "y"], rows) == expected


def test_box_width_follows_title() -> None:
    top, middle, bottom = io.box("path:10").splitlines()
    assert len(top) == len(middle) == len(bottom)
    assert middle.strip("| ") == "path:10"


def test_key_value_lines_align() -> None:
    text = io.key_value_lines([("gamma", 2), ("upper_gamma", None)])
    assert text.splitlines() == [
        "  gamma       : 2",
        "  upper_gamma : -",
    ]


def test_colors_wrap_in_escape_codes() -> None:
    assert io.colors.red("FAIL") == "\033[31mFAIL\033[0m"
    assert io.colors.green("PASS").endswith("PASS\033[0m")
