"""graph6 and plain edge-list text codecs.

graph6 strings go through networkx; this module only checks the order
bounds and converts between networkx graphs and the bitset Graph.
"""

import logging
from typing import Any, Dict, List, Optional

import networkx as nx

from . import bits
from .errors import GraphError, ParseError
from .graph import MAX_ORDER, Graph, from_edge_list


logger = logging.getLogger(__name__)

_HEADER = ">>graph6<<"


def to_networkx(G: Graph) -> nx.Graph:
    H = nx.Graph()
    H.add_nodes_from(range(G.n))
    H.add_edges_from(G.edges())
    return H


def from_networkx(H: nx.Graph) -> Graph:
    """Converts a graph on the vertices 0..n-1 into a bitset Graph."""
    return from_edge_list(
        H.number_of_nodes(),
        sorted(tuple(sorted(edge)) for edge in H.edges()),
    )


def encode_graph6(G: Graph) -> str:
    """
    Examples:
        >>> encode_graph6(from_edge_list(2, [(0, 1)]))
        'A_'
        >>> encode_graph6(from_edge_list(5, []))
        'D??'
    """
    data = nx.to_graph6_bytes(to_networkx(G), header=False)
    return data.decode("ascii").rstrip("\n")


def parse_graph6(text: str, *, line_number: Optional[int] = None) -> Graph:
    """Decodes one graph6 line (a trailing newline is tolerated).

    Examples:
        >>> parse_graph6("A_").edges()
        [(0, 1)]
        >>> parse_graph6("D??").size
        0
    """
    data = text.rstrip("\r\n")
    if data.startswith(_HEADER):
        data = data[len(_HEADER) :]
    if not data:
        raise ParseError("Empty graph6 string", line_number=line_number)
    if any(not 63 <= ord(ch) <= 126 for ch in data):
        raise ParseError(
            "graph6 string has a byte outside the graph6 alphabet",
            line_number=line_number,
        )

    try:
        H = nx.from_graph6_bytes(data.encode("ascii"))
    except (nx.NetworkXError, ValueError, IndexError) as e:
        raise ParseError(
            f"Malformed graph6 string: {data!r}",
            line_number=line_number,
            cause=e,
        ) from e

    n = H.number_of_nodes()
    if n == 0:
        raise ParseError(
            "graph6 string encodes the order-zero graph",
            line_number=line_number,
        )
    if n > MAX_ORDER:
        raise ParseError(
            f"graph6 order {n} exceeds the supported maximum {MAX_ORDER}",
            line_number=line_number,
        )
    return from_networkx(H)


def format_edge_list_text(G: Graph) -> str:
    """Renders G as "n m" followed by one "u v" line per edge."""
    edges = G.edges()
    lines = [f"{G.n} {len(edges)}"]
    lines.extend(f"{u} {v}" for u, v in edges)
    return "\n".join(lines) + "\n"


def parse_edge_list_text(text: str) -> Graph:
    """
    Examples:
        >>> parse_edge_list_text("3 2\\n0 1\\n1 2\\n").edges()
        [(0, 1), (1, 2)]
    """
    lines = [
        (number, line.split())
        for number, line in enumerate(text.splitlines(), start=1)
        if line.strip() and not line.lstrip().startswith("#")
    ]
    if not lines:
        raise ParseError("Empty edge list")

    def ints(number: int, fields: List[str], width: int) -> List[int]:
        if len(fields) != width:
            raise ParseError(
                f"Expected {width} integers, got {len(fields)}",
                line_number=number,
            )
        try:
            return [int(field) for field in fields]
        except ValueError as e:
            raise ParseError(
                "Expected integers", line_number=number, cause=e
            ) from e

    number, fields = lines[0]
    n, m = ints(number, fields, 2)
    if m != len(lines) - 1:
        raise ParseError(
            f"Header promises {m} edges but {len(lines) - 1} follow",
            line_number=number,
        )

    edges = []
    for number, fields in lines[1:]:
        u, v = ints(number, fields, 2)
        edges.append((u, v))

    try:
        return from_edge_list(n, edges)
    except GraphError as e:
        raise ParseError("Edge list does not describe a graph", cause=e) from e


def graph_summary(G: Graph) -> Dict[str, Any]:
    """The JSON-ready identity of a graph used in every report."""
    return {"n": G.n, "m": G.size, "graph6": encode_graph6(G)}


def degree_sequence(G: Graph) -> List[int]:
    return sorted((bits.popcount(row) for row in G.adj), reverse=True)
