"""Tests for the bugyi.certidom.domination module."""

from typing import Any, Callable, List

from hypothesis import given, settings, strategies as st
from pytest import mark, raises

from bugyi.certidom import domination as dom
from bugyi.certidom.errors import GraphError
from bugyi.certidom.graph import Graph, from_edge_list
from bugyi.certidom.vertexset import VertexSet


params = mark.parametrize

P4 = from_edge_list(4, [(0, 1), (1, 2), (2, 3)])
C4 = from_edge_list(4, [(0, 1), (1, 2), (2, 3), (3, 0)])


@st.composite
def graphs_with_sets(draw: Callable[..., Any]) -> Any:
    n = draw(st.integers(min_value=1, max_value=7))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    mask = draw(st.integers(min_value=0, max_value=(1 << len(pairs)) - 1))
    G = from_edge_list(n, [p for i, p in enumerate(pairs) if mask >> i & 1])
    D = VertexSet(n, draw(st.integers(min_value=0, max_value=(1 << n) - 1)))
    return G, D


@params(
    "G,members,dominating,certified",
    [
        (P4, [1, 2], True, False),
        (P4, [0, 3], True, False),
        (P4, [0, 1, 2, 3], True, True),
        (P4, [0, 1], False, False),
        (C4, [0, 2], True, True),
        (C4, [0, 1], True, False),
    ],
)
def test_dominating_and_certified(
    G: Graph, members: List[int], dominating: bool, certified: bool
) -> None:
    D = VertexSet.of(G.n, members)
    assert dom.is_dominating(G, D) is dominating
    assert dom.is_certified_dominating(G, D) is certified


def test_minimality() -> None:
    assert dom.is_minimal_dominating(C4, VertexSet.of(4, [0, 2]))
    assert not dom.is_minimal_dominating(C4, VertexSet.of(4, [0, 1, 2]))
    assert dom.is_minimal_certified_dominating(P4, VertexSet.full(4))


def test_minimal_certified_looks_past_single_deletions() -> None:
    # K_{1,3} plus the full set: removing any one vertex breaks
    # certification, but the centre alone is certified.
    star = from_edge_list(4, [(0, 1), (0, 2), (0, 3)])
    assert dom.is_certified_dominating(star, VertexSet.full(4))
    assert not dom.is_minimal_certified_dominating(star, VertexSet.full(4))
    assert dom.is_minimal_certified_dominating(star, VertexSet.of(4, [0]))


def test_deficiency() -> None:
    report = dom.deficiency(P4, VertexSet.of(4, [0, 1]))
    assert report.exactly_one.to_list() == [1]
    assert report.at_most_one.to_list() == [0, 1]


def test_enclosed_core() -> None:
    assert dom.enclosed_core(P4, VertexSet.of(4, [0, 1, 2])).to_list() == [
        0,
        1,
    ]


def test_predicates_reject_foreign_sets() -> None:
    with raises(GraphError):
        dom.is_dominating(P4, VertexSet.of(5, [0]))


@settings(max_examples=150, deadline=None)
@given(graphs_with_sets())
def test_certified_matches_definition(case: Any) -> None:
    G, D = case
    outside = [v for v in range(G.n) if v not in D]
    dominated = all(
        v in D or any(G.has_edge(v, u) for u in D) for v in range(G.n)
    )
    certified = dominated and all(
        sum(G.has_edge(v, u) for u in outside) != 1 for v in D
    )
    assert dom.is_dominating(G, D) is dominated
    assert dom.is_certified_dominating(G, D) is certified
    if dominated:
        assert certified is (not dom.deficiency(G, D).exactly_one)
