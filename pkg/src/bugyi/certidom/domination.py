"""Domination predicates on explicit vertex sets."""

from dataclasses import dataclass
import logging

from . import bits
from .graph import Graph
from .vertexset import VertexSet


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DeficiencyReport:
    """Members of X with too few neighbours outside X.

    exactly_one: members with exactly one neighbour outside X.
    at_most_one: members with at most one neighbour outside X.
    """

    exactly_one: VertexSet
    at_most_one: VertexSet


def is_dominating(G: Graph, D: VertexSet) -> bool:
    """
    Examples:
        >>> from bugyi.certidom.graph import from_edge_list
        >>> C4 = from_edge_list(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
        >>> is_dominating(C4, VertexSet.of(4, [0, 2]))
        True
    """
    G.check_set(D)
    return bits.is_dominating(G.closed, G.full, D.mask)


def is_certified_dominating(G: Graph, D: VertexSet) -> bool:
    """True iff D dominates G and no member of D has exactly one neighbour
    outside D."""
    G.check_set(D)
    return bits.is_certified(G.adj, G.closed, G.full, D.mask)


def is_minimal_dominating(G: Graph, D: VertexSet) -> bool:
    G.check_set(D)
    return bits.is_minimal_dominating(G.closed, G.full, D.mask)


def is_minimal_certified_dominating(G: Graph, D: VertexSet) -> bool:
    """True iff D is certified dominating and no proper subset is.

    Certified domination is not closed under supersets, so every proper
    subset is examined (smallest first), not only the single deletions.
    """
    G.check_set(D)
    if not bits.is_certified(G.adj, G.closed, G.full, D.mask):
        return False
    return not bits.has_certified_proper_subset(
        G.adj, G.closed, G.full, D.mask
    )


def deficiency(G: Graph, D: VertexSet) -> DeficiencyReport:
    G.check_set(D)
    outside = G.full & ~D.mask
    exactly_one = at_most_one = 0
    for v in D:
        count = bits.popcount(G.adj[v] & outside)
        if count == 1:
            exactly_one |= 1 << v
        if count <= 1:
            at_most_one |= 1 << v
    return DeficiencyReport(
        exactly_one=VertexSet(G.n, exactly_one),
        at_most_one=VertexSet(G.n, at_most_one),
    )


def enclosed_core(G: Graph, D: VertexSet) -> VertexSet:
    """The members of D whose closed neighbourhood lies inside D."""
    G.check_set(D)
    return VertexSet(
        G.n, bits.mask_of(v for v in D if G.closed[v] & ~D.mask == 0)
    )
