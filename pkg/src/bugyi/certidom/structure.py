"""Recognizers for coronas, diadems and the two small join forms."""

from dataclasses import dataclass
import enum
import logging
from typing import Any, Dict, List, Optional, Tuple

from . import bits
from .graph import Graph, delete_vertex, is_connected


logger = logging.getLogger(__name__)

Pairing = Tuple[Tuple[int, int], ...]


class Structure(enum.Enum):
    """Structural labels, listed in precedence order."""

    CORONA = "Corona"
    SIMPLE_DIADEM = "SimpleDiadem"
    DIADEM = "Diadem"
    JOIN_K2 = "JoinK2"
    JOIN_K2_BAR = "JoinK2bar"
    OTHER = "Other"


@dataclass(frozen=True)
class StructureEvidence:
    """The role assignment that proves a label.

    pairing: (anchor, pendant) pairs of a corona (of G, or of G - x for the
        diadem labels), in G's own vertex numbering.
    added_vertex: the vertex x whose deletion leaves a corona.
    attachment: the neighbours of @added_vertex.
    dominating_pair: the two vertices adjacent to every other vertex of a
        join form.
    """

    pairing: Pairing = ()
    added_vertex: Optional[int] = None
    attachment: Tuple[int, ...] = ()
    dominating_pair: Optional[Tuple[int, int]] = None

    def to_json(self) -> Dict[str, Any]:
        result: Dict[str, Any] = {}
        if self.pairing:
            result["pairing"] = [list(pair) for pair in self.pairing]
        if self.added_vertex is not None:
            result["added_vertex"] = self.added_vertex
            result["attachment"] = list(self.attachment)
        if self.dominating_pair is not None:
            result["dominating_pair"] = list(self.dominating_pair)
        return result


@dataclass(frozen=True)
class StructureLabel:
    label: Structure
    evidence: Optional[StructureEvidence]
    matches: Tuple[Structure, ...]

    def to_json(self) -> Dict[str, Any]:
        evidence = self.evidence
        return {
            "label": self.label.value,
            "evidence": None if evidence is None else evidence.to_json(),
            "matches": [s.value for s in self.matches],
        }


def _leaves(G: Graph) -> int:
    mask = 0
    for v, row in enumerate(G.adj):
        if bits.popcount(row) == 1:
            mask |= 1 << v
    return mask


def corona_pairing(G: Graph) -> Optional[Pairing]:
    """Matches every non-leaf with its unique pendant leaf.

    G is a corona iff every vertex is a leaf or is adjacent to exactly one
    leaf. A K2 component contributes the pair (smaller, larger).

    Examples:
        >>> from bugyi.certidom.graph import from_edge_list
        >>> corona_pairing(from_edge_list(4, [(0, 1), (1, 2), (2, 3)]))
        ((1, 0), (2, 3))
        >>> corona_pairing(from_edge_list(3, [(0, 1), (1, 2)])) is None
        True
    """
    leaves = _leaves(G)
    pairs: List[Tuple[int, int]] = []
    for v, row in enumerate(G.adj):
        if leaves >> v & 1:
            (u,) = bits.iter_bits(row)
            if leaves >> u & 1 and v < u:
                pairs.append((v, u))
            continue
        pendant = row & leaves
        if bits.popcount(pendant) != 1:
            return None
        pairs.append((v, pendant.bit_length() - 1))
    return tuple(pairs)


def is_corona(G: Graph) -> bool:
    return corona_pairing(G) is not None


def _supports(G: Graph) -> int:
    leaves = _leaves(G)
    mask = 0
    for v, row in enumerate(G.adj):
        if row & leaves:
            mask |= 1 << v
    return mask


def _lift(pairing: Pairing, x: int) -> Pairing:
    """Renumbers a pairing of G - x into G's vertex numbering."""

    def up(v: int) -> int:
        return v + 1 if v >= x else v

    return tuple((up(a), up(b)) for a, b in pairing)


def _diadem_evidence(
    G: Graph, simple: bool
) -> Optional[StructureEvidence]:
    if G.n < 3:
        return None
    for x in range(G.n):
        neighbours = list(bits.iter_bits(G.adj[x]))
        if len(neighbours) != (1 if simple else 2):
            continue

        H = delete_vertex(G, x)
        pairing = corona_pairing(H)
        if pairing is None:
            continue

        # Neighbour indices in H.
        local = [v - 1 if v > x else v for v in neighbours]
        if simple:
            ok = bool(_supports(H) >> local[0] & 1)
        else:
            a, b = local
            leaves = _leaves(H)
            ok = bool(H.adj[a] >> b & 1) and bool(
                (leaves >> a | leaves >> b) & 1
            )
        if ok:
            return StructureEvidence(
                pairing=_lift(pairing, x),
                added_vertex=x,
                attachment=tuple(neighbours),
            )
    return None


def _join_pair(G: Graph) -> Optional[Tuple[int, int]]:
    """Finds a, b adjacent to all other vertices, the rest independent."""
    if G.n < 3:
        return None
    for a in range(G.n):
        for b in range(a + 1, G.n):
            pair = (1 << a) | (1 << b)
            rest = G.full & ~pair
            if G.adj[a] & rest != rest or G.adj[b] & rest != rest:
                continue
            if all(G.adj[c] == pair for c in bits.iter_bits(rest)):
                return a, b
    return None


def classify_structure(G: Graph) -> StructureLabel:
    """Labels G by the first matching structure in precedence order.

    Diadem and join labels are only considered for connected graphs; the
    corona label applies to disconnected graphs as well.

    Examples:
        >>> from bugyi.certidom.graph import from_edge_list
        >>> P3 = from_edge_list(3, [(0, 1), (1, 2)])
        >>> result = classify_structure(P3)
        >>> result.label.value, [s.value for s in result.matches]
        ('SimpleDiadem', ['SimpleDiadem', 'JoinK2bar'])
    """
    found: List[Tuple[Structure, StructureEvidence]] = []

    pairing = corona_pairing(G)
    if pairing is not None:
        found.append((Structure.CORONA, StructureEvidence(pairing=pairing)))

    if is_connected(G):
        simple = _diadem_evidence(G, simple=True)
        if simple is not None:
            found.append((Structure.SIMPLE_DIADEM, simple))
        diadem = _diadem_evidence(G, simple=False)
        if diadem is not None:
            found.append((Structure.DIADEM, diadem))
        pair = _join_pair(G)
        if pair is not None:
            a, b = pair
            kind = (
                Structure.JOIN_K2
                if G.adj[a] >> b & 1
                else Structure.JOIN_K2_BAR
            )
            found.append((kind, StructureEvidence(dominating_pair=pair)))

    if not found:
        return StructureLabel(Structure.OTHER, None, ())

    label, evidence = found[0]
    logger.debug(
        "Classified graph. | n=%d  label=%s  matches=%d",
        G.n,
        label.value,
        len(found),
    )
    return StructureLabel(
        label, evidence, tuple(structure for structure, _ in found)
    )
