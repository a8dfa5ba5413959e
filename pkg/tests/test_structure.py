"""Tests for the bugyi.certidom.structure module."""

from typing import List

from pytest import mark

from bugyi.certidom.families import build, parse_family
from bugyi.certidom.graph import from_edge_list, relabel
from bugyi.certidom.structure import (
    Structure,
    classify_structure,
    corona_pairing,
    is_corona,
)


params = mark.parametrize


@params(
    "family,label",
    [
        ("corona:cycle:3", Structure.CORONA),
        ("path:4", Structure.CORONA),
        ("path:2", Structure.CORONA),
        ("cycle:4", Structure.JOIN_K2_BAR),
        ("path:3", Structure.SIMPLE_DIADEM),
        ("sdiadem:corona:path:2", Structure.SIMPLE_DIADEM),
        ("sdiadem:corona:cycle:4", Structure.SIMPLE_DIADEM),
        ("diadem:corona:complete:2", Structure.DIADEM),
        ("diadem:corona:path:3", Structure.DIADEM),
        ("joink2:5", Structure.JOIN_K2),
        ("joink2bar:5", Structure.JOIN_K2_BAR),
        ("complete:3", Structure.DIADEM),
        ("complete:4", Structure.OTHER),
        ("cycle:5", Structure.OTHER),
        ("complete:1", Structure.OTHER),
        ("star:3", Structure.OTHER),
    ],
)
def test_classify_structure_families(family: str, label: Structure) -> None:
    assert classify_structure(build(parse_family(family))).label is label


def test_p3_lists_every_match() -> None:
    result = classify_structure(build(parse_family("path:3")))
    assert result.matches == (Structure.SIMPLE_DIADEM, Structure.JOIN_K2_BAR)
    assert result.evidence is not None
    assert result.evidence.added_vertex == 0
    assert result.evidence.attachment == (1,)


def test_disconnected_corona() -> None:
    two_k2 = from_edge_list(4, [(0, 1), (2, 3)])
    result = classify_structure(two_k2)
    assert result.label is Structure.CORONA
    assert result.matches == (Structure.CORONA,)
    assert corona_pairing(two_k2) == ((0, 1), (2, 3))


def test_disconnected_non_corona_is_other() -> None:
    G = from_edge_list(4, [(0, 1), (1, 2)])
    assert classify_structure(G).label is Structure.OTHER


def test_join_evidence_names_the_pair() -> None:
    result = classify_structure(build(parse_family("joink2bar:4")))
    assert result.evidence is not None
    assert result.evidence.dominating_pair == (0, 1)
    assert result.to_json()["evidence"] == {"dominating_pair": [0, 1]}


def test_corona_pairing_of_path() -> None:
    assert corona_pairing(build(parse_family("path:4"))) == ((1, 0), (2, 3))


@params("permutation", [[3, 1, 0, 2], [2, 0, 3, 1], [1, 3, 2, 0]])
def test_corona_is_invariant_under_relabeling(permutation: List[int]) -> None:
    P4 = build(parse_family("path:4"))
    assert is_corona(relabel(P4, permutation))


def test_diadem_evidence_is_valid() -> None:
    G = build(parse_family("diadem:corona:complete:2"))
    result = classify_structure(G)
    assert result.evidence is not None
    x = result.evidence.added_vertex
    assert x is not None
    assert len(result.evidence.attachment) == 2
    a, b = result.evidence.attachment
    assert G.has_edge(a, b)
    assert all(G.has_edge(x, v) for v in (a, b))
