"""Tests for the bugyi.certidom.graph and bugyi.certidom.vertexset
modules."""

import random
from typing import Any, Callable, List, Tuple

from hypothesis import given, settings, strategies as st
import networkx as nx
from pytest import mark, raises

from bugyi.certidom import graph as gr, solver
from bugyi.certidom.catalog import random_graph
from bugyi.certidom.errors import GraphError, PreconditionError
from bugyi.certidom.graph import Graph, from_edge_list
from bugyi.certidom.graph6 import to_networkx
from bugyi.certidom.vertexset import VertexSet


params = mark.parametrize

P4 = from_edge_list(4, [(0, 1), (1, 2), (2, 3)])
C4 = from_edge_list(4, [(0, 1), (1, 2), (2, 3), (3, 0)])


@st.composite
def graphs(draw: Callable[..., Any], max_order: int = 8) -> Graph:
    n = draw(st.integers(min_value=1, max_value=max_order))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    mask = draw(st.integers(min_value=0, max_value=(1 << len(pairs)) - 1))
    chosen = [pair for i, pair in enumerate(pairs) if mask >> i & 1]
    return from_edge_list(n, chosen)


@params(
    "n,edges,emsg",
    [
        (0, [], "order"),
        (65, [], "order"),
        (3, [(0, 3)], "outside"),
        (3, [(1, 1)], "Loop"),
    ],
)
def test_from_edge_list_rejects(
    n: int, edges: List[Tuple[int, int]], emsg: str
) -> None:
    with raises(GraphError, match=emsg):
        from_edge_list(n, edges)


def test_graph_rejects_asymmetric_rows() -> None:
    with raises(GraphError, match="symmetric"):
        Graph(2, (0b10, 0b00))


def test_duplicate_edges_collapse() -> None:
    G = from_edge_list(3, [(0, 1), (1, 0), (0, 1)])
    assert G.size == 1
    assert G.edges() == [(0, 1)]


def test_vertexset_operations() -> None:
    X = VertexSet.of(6, [0, 2, 4])
    Y = VertexSet.of(6, [2, 3])
    assert (X & Y).to_list() == [2]
    assert (X - Y).to_list() == [0, 4]
    assert X.complement().to_list() == [1, 3, 5]
    assert VertexSet.of(6, [2]).issubset(Y)
    assert X.add(1).discard(0).to_list() == [1, 2, 4]
    assert 7 not in X


def test_vertexset_rejects_mismatched_universes() -> None:
    with raises(GraphError):
        VertexSet.of(3, [0]) | VertexSet.of(4, [0])
    with raises(GraphError):
        VertexSet.of(3, [3])


def test_neighbourhood_of_sets() -> None:
    X = VertexSet.of(4, [0, 3])
    assert gr.open_neighborhood_of_set(P4, X).to_list() == [1, 2]
    assert gr.closed_neighborhood_of_set(P4, X).to_list() == [0, 1, 2, 3]
    assert gr.open_neighborhood(P4, 1).to_list() == [0, 2]


def test_leaf_support_report() -> None:
    # A star K_{1,3} with one ray extended: 0 is a strong support.
    G = from_edge_list(5, [(0, 1), (0, 2), (0, 3), (3, 4)])
    report = gr.leaf_support_report(G)
    assert report.leaves.to_list() == [1, 2, 4]
    assert report.supports.to_list() == [0, 3]
    assert report.strong_supports.to_list() == [0]
    assert report.weak_supports.to_list() == [3]


def test_private_neighborhood_requires_membership() -> None:
    with raises(PreconditionError):
        gr.private_neighborhood(P4, 0, VertexSet.of(4, [1, 2]))


def test_open_private_neighborhood() -> None:
    X = VertexSet.of(4, [0, 3])
    assert gr.private_neighborhood(P4, 0, X, closed=False).to_list() == [1]


def test_induced_subgraph_renumbers() -> None:
    H = gr.induced_subgraph(C4, VertexSet.of(4, [1, 2, 3]))
    assert H.edges() == [(0, 1), (1, 2)]


def test_delete_vertex_of_k1() -> None:
    with raises(PreconditionError):
        gr.delete_vertex(from_edge_list(1, []), 0)


def test_components_order() -> None:
    G = from_edge_list(5, [(3, 4), (0, 2)])
    parts = [(X.to_list(), H.edges()) for X, H in gr.components(G)]
    assert parts == [([0, 2], [(0, 1)]), ([1], []), ([3, 4], [(0, 1)])]


@params(
    "G,expected",
    [(P4, False), (C4, True), (from_edge_list(5, []), True)],
)
def test_is_p4_free(G: Graph, expected: bool) -> None:
    assert gr.is_p4_free(G) is expected


def test_is_independent() -> None:
    assert gr.is_independent(C4, VertexSet.of(4, [0, 2]))
    assert not gr.is_independent(C4, VertexSet.of(4, [0, 1]))


def test_relabel_rejects_non_permutation() -> None:
    with raises(GraphError):
        gr.relabel(P4, [0, 0, 1, 2])


@settings(max_examples=75, deadline=None)
@given(graphs())
def test_connectivity_agrees_with_networkx(G: Graph) -> None:
    H = to_networkx(G)
    assert gr.is_connected(G) is nx.is_connected(H)
    expected = sorted(sorted(c) for c in nx.connected_components(H))
    assert [X.to_list() for X, _ in gr.components(G)] == expected


@settings(max_examples=75, deadline=None)
@given(graphs(), st.randoms(use_true_random=False))
def test_relabel_preserves_isomorphism_class(
    G: Graph, rnd: random.Random
) -> None:
    permutation = list(range(G.n))
    rnd.shuffle(permutation)
    H = gr.relabel(G, permutation)
    assert nx.is_isomorphic(to_networkx(G), to_networkx(H))
    assert gr.is_p4_free(G) is gr.is_p4_free(H)


@settings(max_examples=75, deadline=None)
@given(graphs())
def test_independence_number_agrees_with_networkx(G: Graph) -> None:
    complement = nx.complement(to_networkx(G))
    clique = max(len(c) for c in nx.find_cliques(complement))
    assert gr.max_independent_set_size(G) == clique


def test_relabel_preserves_invariant_quadruple() -> None:
    rng = random.Random(17)
    for _ in range(100):
        G = random_graph(rng.randint(1, 8), rng.choice([0.3, 0.5, 0.7]), rng)
        permutation = list(range(G.n))
        rng.shuffle(permutation)
        H = gr.relabel(G, permutation)
        assert solver.invariant_quadruple(H) == solver.invariant_quadruple(G)
