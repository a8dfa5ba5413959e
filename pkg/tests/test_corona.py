"""Tests for the bugyi.certidom.corona module."""

import random

import networkx as nx
from pytest import mark, raises

from bugyi.certidom import corona as cr, domination as dom, solver
from bugyi.certidom.corona import PartitionFamily
from bugyi.certidom.errors import ParseError, PartitionError
from bugyi.certidom.graph import from_edge_list


params = mark.parametrize

# v=0, u=1, w=2, z=3
KITE = from_edge_list(4, [(0, 3), (0, 1), (1, 3), (1, 2)])
KITE_FAMILY = PartitionFamily.from_lists(
    4, [[[3], [1]], [[0, 3], [2]], [[1]], [[0, 1]]]
)
P3 = from_edge_list(3, [(0, 1), (1, 2)])


def test_p_corona_of_kite() -> None:
    pc = cr.p_corona(KITE, KITE_FAMILY)
    assert pc.graph.n == 10
    assert pc.graph.size == 10
    assert pc.base_order == 4
    assert [str(tag) for tag in pc.labels[4:]] == [
        "(0,{3})",
        "(0,{1})",
        "(1,{0,3})",
        "(1,{2})",
        "(2,{1})",
        "(3,{0,1})",
    ]
    # The block of P(v) holding u meets the block of P(u) holding v.
    assert pc.graph.has_edge(5, 6)
    assert pc.graph.has_edge(4, 9)
    assert pc.graph.has_edge(6, 9)
    assert pc.graph.has_edge(7, 8)


def test_p_corona_of_kite_invariants() -> None:
    pc = cr.p_corona(KITE, KITE_FAMILY)
    assert cr.equality_predicate(KITE, KITE_FAMILY)
    assert solver.gamma(pc.graph).value == 4
    assert solver.gamma_cer(pc.graph).value == 4


def test_p_corona_gamma_set() -> None:
    pc = cr.p_corona(KITE, KITE_FAMILY)
    D = cr.p_corona_gamma_set(KITE, KITE_FAMILY)
    assert D.to_list() == [0, 1, 8, 9]
    assert dom.is_dominating(pc.graph, D)
    assert dom.is_certified_dominating(pc.graph, D)


def test_kite_family_is_not_maximal() -> None:
    report = cr.is_maximal_family(KITE, KITE_FAMILY)
    assert not report.maximal
    assert report.dominating_set.to_list() == [0, 1]
    assert report.private_neighbors == ()


def test_singleton_family_of_p3_is_maximal() -> None:
    report = cr.is_maximal_family(P3, cr.singleton_family(P3))
    assert report.maximal
    assert report.to_json() == {
        "maximal": True,
        "dominating_set": [1],
        "oversized": [],
        "private_neighbors": [[1, 0]],
    }


@params(
    "lists,emsg",
    [
        ([[[2]], [[0], [2]], [[1]]], "vertex 0: foreign element {2}"),
        ([[[1]], [[0]], [[1]]], "vertex 1: missing element {2}"),
        ([[[1]], [[0, 2], [2]], [[1]]], "vertex 1: overlap {2}"),
        ([[[1], []], [[0, 2]], [[1]]], "vertex 0: empty block"),
    ],
)
def test_validate_partition_family(lists: list, emsg: str) -> None:
    P = PartitionFamily.from_lists(3, lists)
    result = cr.validate_partition_family(P3, P)
    assert result.is_err()
    assert str(result.err()) == f"Invalid partition family: {emsg}"
    with raises(PartitionError):
        cr.p_corona(P3, P)


def test_validate_accepts_good_family() -> None:
    result = cr.validate_partition_family(KITE, KITE_FAMILY)
    assert result.unwrap() == KITE_FAMILY


@params("family", ["trivial", "singleton"])
def test_p_corona_order(family: str) -> None:
    C5 = from_edge_list(5, [(i, (i + 1) % 5) for i in range(5)])
    P = getattr(cr, f"{family}_family")(C5)
    blocks = sum(P.part_count(v) for v in range(5))
    assert cr.p_corona(C5, P).graph.n == 5 + blocks


def test_corona_k1_keeps_isolated_vertices() -> None:
    pc = cr.corona_k1(from_edge_list(1, []))
    assert pc.graph.edges() == [(0, 1)]
    assert [str(tag) for tag in pc.labels] == ["(0,1)", "(0,{})"]


def test_corona_k1_matches_trivial_family() -> None:
    assert cr.corona_k1(P3) == cr.p_corona(P3, cr.trivial_family(P3))


def test_two_subdivision_of_triangle_is_nine_cycle() -> None:
    K3 = from_edge_list(3, [(0, 1), (0, 2), (1, 2)])
    pc = cr.two_subdivision(K3)
    H = nx.Graph()
    H.add_nodes_from(range(pc.graph.n))
    H.add_edges_from(pc.graph.edges())
    assert nx.is_isomorphic(H, nx.cycle_graph(9))


def test_refinement_order() -> None:
    fine = cr.singleton_family(P3)
    coarse = cr.trivial_family(P3)
    assert cr.is_refinement(fine, coarse)
    assert not cr.is_refinement(coarse, fine)
    assert list(cr.coarsenings(P3, fine)) == [coarse]
    assert list(cr.refinements(P3, coarse)) == [fine]


def test_family_counts() -> None:
    assert cr.family_count(P3) == 2
    assert len(list(cr.all_families(P3))) == 2
    assert cr.family_count(KITE) == 2 * 5 * 1 * 2


def test_random_family_is_seeded() -> None:
    first = cr.random_family(KITE, random.Random(7))
    second = cr.random_family(KITE, random.Random(7))
    assert first == second
    assert cr.validate_partition_family(KITE, first).is_ok()


def test_partition_family_text() -> None:
    text = cr.format_partition_family(KITE_FAMILY)
    assert text == "0: {3}|{1}\n1: {0,3}|{2}\n2: {1}\n3: {0,1}\n"
    assert cr.parse_partition_family(text, 4) == KITE_FAMILY


def test_parse_partition_family_skips_comments() -> None:
    text = "# P3\n1: { 0 , 2 }\n0: {1}\n\n2: {1}\n"
    P = cr.parse_partition_family(text, 3)
    assert P == cr.trivial_family(P3)


@params(
    "text,emsg,line",
    [
        ("0 {1}\n", "Expected", 1),
        ("0: {1}\n0: {1}\n", "listed twice", 2),
        ("0: {1}\n5: {1}\n", "outside", 2),
        ("0: {1}|[2]\n", "Malformed block", 1),
    ],
)
def test_parse_partition_family_errors(
    text: str, emsg: str, line: int
) -> None:
    with raises(ParseError, match=emsg) as info:
        cr.parse_partition_family(text, 3)
    assert info.value.line_number == line
