"""Tests for the bugyi.certidom.catalog module."""

from pathlib import Path

from _pytest.monkeypatch import MonkeyPatch
from pytest import mark, raises

from bugyi.certidom import catalog
from bugyi.certidom.errors import (
    CertidomError,
    EnumerationLimitError,
    GraphError,
)


params = mark.parametrize


@params(
    "n,connected_only,count",
    [(1, False, 1), (2, False, 2), (2, True, 1), (3, False, 8), (3, True, 4)],
)
def test_enumeration_counts(n: int, connected_only: bool, count: int) -> None:
    graphs = list(catalog.enumerate_labeled_graphs(n, connected_only))
    assert len(graphs) == count


def test_connected_order_four() -> None:
    graphs = catalog.enumerate_labeled_graphs(4, connected_only=True)
    assert sum(1 for _ in graphs) == 38


def test_enumeration_order() -> None:
    graphs = list(catalog.enumerate_labeled_graphs(3))
    assert graphs[0].size == 0
    assert graphs[-1].size == 3
    assert catalog.labeled_graph_count(3) == 8


def test_enumeration_cap_from_environment(monkeypatch: MonkeyPatch) -> None:
    monkeypatch.setenv("CERTIDOM_MAX_N", "3")
    with raises(EnumerationLimitError, match="CERTIDOM_MAX_N"):
        catalog.enumerate_labeled_graphs(4)
    assert len(list(catalog.enumerate_labeled_graphs(4, cap=4))) == 64


def test_enumeration_rejects_empty_order() -> None:
    with raises(GraphError):
        catalog.enumerate_labeled_graphs(0)


def test_ingest_graph6_lines_keeps_going() -> None:
    items = list(catalog.ingest_graph6_lines(["A_", "", "bad!", "Bw"]))
    assert [number for number, _ in items] == [1, 3, 4]
    assert items[0][1].unwrap().edges() == [(0, 1)]
    error = items[1][1].err()
    assert error is not None
    assert getattr(error, "line_number") == 3
    assert str(error).startswith("line 3: ")
    assert items[2][1].unwrap().size == 3


def test_ingest_graph6_file(tmp_path: Path) -> None:
    path = tmp_path / "graphs.g6"
    path.write_text("A_\nC~\n")
    orders = [G.unwrap().n for _, G in catalog.ingest_graph6_file(path)]
    assert orders == [2, 4]


def test_ingest_missing_file(tmp_path: Path) -> None:
    with raises(CertidomError, match="Unable to read"):
        catalog.ingest_graph6_file(tmp_path / "missing.g6")


def test_sample_corona_pairs_is_seeded() -> None:
    first = catalog.sample_corona_pairs(11, 5, 4)
    assert first == catalog.sample_corona_pairs(11, 5, 4)
    assert all(1 <= G.n <= 4 for G, _ in first)
    assert all(P.n == G.n for G, P in first)
