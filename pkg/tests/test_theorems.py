"""Tests for the bugyi.certidom.theorems module."""

from typing import Optional

from _pytest.monkeypatch import MonkeyPatch
from pytest import mark, raises

from bugyi.certidom import theorems as th
from bugyi.certidom.catalog import enumerate_labeled_graphs
from bugyi.certidom.corona import PartitionFamily
from bugyi.certidom.errors import UnknownTheoremError
from bugyi.certidom.families import build, parse_family
from bugyi.certidom.graph import Graph, from_edge_list
from bugyi.certidom.theorems import CheckKind, Outcome, Scope, TheoremCheck


params = mark.parametrize

ALL_IDS = [
    "thm-2.1",
    "cor-2.2",
    "cor-2.3",
    "cor-2.4",
    "cor-2.5",
    "thm-2.6",
    "thm-2.7",
    "cor-2.8",
    "lem-2.9",
    "lem-2.10",
    "thm-2.11",
    "cor-corona-strict",
    "cor-2subdivision",
    "thm-maximal-family",
    "refinement-monotonicity",
    "lem-3.1",
    "thm-3.2",
    "thm-3.3",
    "gap-law",
    "lem-3.4",
    "thm-3.5",
    "cor-3.6",
    "sandwich",
]

_SAMPLE_FAMILIES = [
    "path:3",
    "path:4",
    "path:5",
    "cycle:4",
    "cycle:5",
    "star:3",
    "complete:3",
    "kbip:2,3",
    "joink2bar:4",
    "corona:path:2",
    "sdiadem:corona:path:2",
]


def _family(text: str) -> Graph:
    return build(parse_family(text))


def _never(G: Graph, _: Optional[PartitionFamily]) -> th.Evaluation:
    return True, False, {"n": G.n}


def test_registry_ids() -> None:
    assert th.theorem_ids() == ALL_IDS
    assert set(th.CHEAP_IDS) <= set(ALL_IDS)


def test_resolve_ids() -> None:
    assert th.resolve_ids(["cheap"]) == list(th.CHEAP_IDS)
    assert th.resolve_ids(["gap-law", "gap-law", "thm-2.1"]) == [
        "gap-law",
        "thm-2.1",
    ]
    assert th.resolve_ids(["all"]) == ALL_IDS


def test_unknown_ids() -> None:
    with raises(UnknownTheoremError, match="nonsense"):
        th.resolve_ids(["nonsense"])
    with raises(UnknownTheoremError):
        th.check_theorem("thm-9.9", _family("path:3"))


@params(
    "kind,hypothesis,conclusion,failed",
    [
        (CheckKind.IMPLICATION, True, False, True),
        (CheckKind.IMPLICATION, False, False, False),
        (CheckKind.BICONDITIONAL, False, True, True),
        (CheckKind.BICONDITIONAL, False, False, False),
        (CheckKind.INVARIANT, True, False, True),
    ],
)
def test_is_failure(
    kind: CheckKind, hypothesis: bool, conclusion: bool, failed: bool
) -> None:
    assert th.is_failure(kind, hypothesis, conclusion) is failed


def test_leafless_cycle_passes() -> None:
    result = th.check_theorem("cor-2.3", _family("cycle:5"))
    assert result.outcome is Outcome.PASS
    assert result.hypothesis is True
    assert result.conclusion is True


def test_p4_free_statement() -> None:
    result = th.check_theorem("thm-2.7", _family("path:4"))
    assert result.outcome is Outcome.PASS
    assert result.hypothesis is False


@params(
    "theorem_id,family",
    [
        ("thm-2.7", "path:2"),
        ("thm-2.1", "path:2"),
        ("thm-2.7", "empty:3"),
        ("thm-maximal-family", "path:5"),
        ("thm-2.11", "empty:2"),
    ],
)
def test_out_of_scope_graphs_are_skipped(
    theorem_id: str, family: str
) -> None:
    result = th.check_theorem(theorem_id, _family(family))
    assert result.outcome is Outcome.SKIPPED
    assert result.to_json()["hypothesis"] is None


@params("theorem_id", ALL_IDS)
@params("family", _SAMPLE_FAMILIES)
def test_statements_hold_on_named_graphs(theorem_id: str, family: str) -> None:
    result = th.check_theorem(theorem_id, _family(family))
    assert result.outcome is not Outcome.FAIL, result.to_json()


def test_family_statement_with_explicit_family() -> None:
    kite = from_edge_list(4, [(0, 3), (0, 1), (1, 3), (1, 2)])
    P = PartitionFamily.from_lists(
        4, [[[3], [1]], [[0, 3], [2]], [[1]], [[0, 1]]]
    )
    result = th.check_theorem("thm-2.11", kite, P)
    assert result.outcome is Outcome.PASS
    assert result.hypothesis is True
    assert result.conclusion is True


def test_family_statement_counts_families() -> None:
    result = th.check_theorem("lem-2.10", _family("path:3"))
    assert result.outcome is Outcome.PASS
    assert result.detail == {"families_checked": 2}


def test_failing_statement_reports_family(monkeypatch: MonkeyPatch) -> None:
    check = TheoremCheck(
        "always-fails",
        CheckKind.IMPLICATION,
        "never holds",
        Scope(),
        _never,
        needs_family=True,
    )
    monkeypatch.setitem(th.THEOREMS, "always-fails", check)
    result = th.check_theorem("always-fails", _family("path:3"))
    assert result.outcome is Outcome.FAIL
    assert result.detail["n"] == 3
    assert result.detail["family"] == "0: {1}\n1: {0,2}\n2: {1}\n"


def test_scope_descriptions() -> None:
    assert str(Scope()) == "all graphs"
    scope = Scope(min_order=3, max_order=16, connected=True)
    assert str(scope) == "connected, n >= 3, n <= 16"
    assert str(Scope(min_degree=1, exclude_k2=True)) == (
        "min degree >= 1, not K2"
    )


def test_theorem_check_json() -> None:
    assert th.THEOREMS["gap-law"].to_json() == {
        "id": "gap-law",
        "kind": "invariant",
        "statement": "Gamma_cer is never n - 1",
        "scope": "n <= 16",
        "needs_family": False,
    }


@mark.slow
@params("n", [1, 2, 3, 4, 5, 6])
def test_cheap_statements_hold_exhaustively(n: int) -> None:
    for G in enumerate_labeled_graphs(n):
        for theorem_id in th.CHEAP_IDS:
            result = th.check_theorem(theorem_id, G)
            assert result.outcome is not Outcome.FAIL, result.to_json()


@mark.slow
@params("n", [1, 2, 3, 4, 5, 6])
def test_every_statement_holds_exhaustively(n: int) -> None:
    for G in enumerate_labeled_graphs(n):
        for theorem_id in ALL_IDS:
            result = th.check_theorem(theorem_id, G)
            assert result.outcome is not Outcome.FAIL, result.to_json()


@mark.slow
def test_cheap_statements_hold_on_order_seven() -> None:
    for G in enumerate_labeled_graphs(7):
        for theorem_id in th.CHEAP_IDS:
            result = th.check_theorem(theorem_id, G)
            assert result.outcome is not Outcome.FAIL, result.to_json()


@mark.slow
@params("n", [3, 4, 5, 6, 7])
def test_near_extremal_classification_is_exact(n: int) -> None:
    for G in enumerate_labeled_graphs(n, connected_only=True):
        result = th.check_theorem("thm-3.3", G)
        assert result.outcome is Outcome.PASS, result.to_json()


@mark.slow
@params("n", [2, 3, 4, 5, 6])
def test_enclosed_core_is_a_corona(n: int) -> None:
    for G in enumerate_labeled_graphs(n, connected_only=True):
        result = th.check_theorem("lem-3.1", G)
        assert result.outcome is Outcome.PASS, result.to_json()


def test_independent_upper_set_covers_disconnected_graphs() -> None:
    two_squares = from_edge_list(
        8,
        [(0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (5, 6), (6, 7), (7, 4)],
    )
    result = th.check_theorem("thm-3.5", two_squares)
    assert result.outcome is Outcome.PASS
    assert result.hypothesis
    assert result.detail["upper_gamma"] == 4
    assert result.detail["upper_gamma_cer"] == 4
