"""Tests for the bugyi.certidom.families module."""

from typing import Dict, List, Tuple

from pytest import mark, raises

from bugyi.certidom import families as fam, solver
from bugyi.certidom.errors import GraphError, ParseError
from bugyi.certidom.families import FamilyKind, FamilySpec


params = mark.parametrize

_GRID = (
    [f"path:{n}" for n in range(1, 13)]
    + [f"cycle:{n}" for n in range(3, 13)]
    + [f"complete:{n}" for n in range(1, 9)]
    + [f"star:{n}" for n in range(1, 9)]
    + [f"kbip:{m},{n}" for n in range(2, 7) for m in range(2, n + 1)]
    + ["kbip:1,4"]
    + ["joink2:4", "joink2:6", "joink2bar:4", "joink2bar:6"]
    + ["corona:path:3", "corona:cycle:4", "corona:complete:1"]
    + ["sdiadem:corona:path:2", "diadem:corona:path:3"]
)


def _computed(text: str) -> Dict[str, int]:
    G = fam.build(fam.parse_family(text))
    g, upper, cer, upper_cer = solver.invariant_quadruple(G)
    return {
        "gamma": g,
        "upper_gamma": upper,
        "gamma_cer": cer,
        "upper_gamma_cer": upper_cer,
    }


@params("text", _GRID)
def test_closed_forms_match_solvers(text: str) -> None:
    expected = fam.expected(fam.parse_family(text)).as_dict()
    computed = _computed(text)
    for name, value in expected.items():
        if value is not None:
            assert computed[name] == value, name


@params(
    "spec,edges",
    [
        (fam.star(3), [(0, 1), (0, 2), (0, 3)]),
        (fam.complete_bipartite(1, 2), [(0, 1), (0, 2)]),
        (fam.cycle(3), [(0, 1), (0, 2), (1, 2)]),
        (fam.corona_of(fam.path(2)), [(0, 1), (0, 2), (1, 3)]),
        (
            fam.diadem_of(fam.corona_of(fam.complete(2))),
            [(0, 1), (0, 2), (0, 4), (1, 3), (2, 4)],
        ),
    ],
)
def test_build_numbering(
    spec: FamilySpec, edges: List[Tuple[int, int]]
) -> None:
    assert fam.build(spec).edges() == edges


def test_p7_values() -> None:
    expected = fam.expected(fam.path(7))
    assert (
        expected.gamma,
        expected.gamma_cer,
        expected.upper_gamma,
        expected.upper_gamma_cer,
    ) == (3, 3, 4, 3)


def test_guarded_formulas_are_absent() -> None:
    assert fam.expected(fam.path(4)).gamma_cer is None
    assert fam.expected(fam.path(4)).upper_gamma is None
    assert fam.expected(fam.complete(2)).as_dict() == {
        "gamma": None,
        "gamma_cer": None,
        "upper_gamma": None,
        "upper_gamma_cer": None,
    }


@params(
    "text",
    ["path:4", "kbip:2,3", "corona:cycle:5", "sdiadem:corona:path:3"],
)
def test_parse_family_round_trip(text: str) -> None:
    assert str(fam.parse_family(text)) == text


def test_parse_family_is_case_insensitive() -> None:
    assert fam.parse_family(" PATH:3 ").kind is FamilyKind.PATH


@params(
    "text,emsg",
    [
        ("wheel:5", "Unknown family"),
        ("path:x", "integers"),
        ("path:0", "Invalid family"),
        ("cycle:2", "Invalid family"),
        ("kbip:3", "Invalid family"),
        ("kbip:4,2", "Invalid family"),
        ("corona", "needs a base family"),
        ("sdiadem:path:3", "Invalid family"),
    ],
)
def test_parse_family_errors(text: str, emsg: str) -> None:
    with raises(ParseError, match=emsg):
        fam.parse_family(text)


def test_family_spec_validates_directly() -> None:
    with raises(GraphError, match="corona base"):
        FamilySpec(FamilyKind.DIADEM_OF, base=fam.path(3))


def test_family_json() -> None:
    assert fam.family_json(fam.cycle(6)) == {
        "family": "cycle:6",
        "expected": {
            "gamma": 2,
            "gamma_cer": 2,
            "upper_gamma": 3,
            "upper_gamma_cer": 3,
        },
    }
