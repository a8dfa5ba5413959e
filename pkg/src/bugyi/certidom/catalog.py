"""Sources of small graphs: the labeled enumerator, graph6 files and
seeded random samples."""

import logging
from pathlib import Path
import random
from typing import Iterable, Iterator, List, Optional, Tuple

from result import Err, Ok

from . import bits
from .config import enumeration_cap
from .corona import PartitionFamily, random_family
from .errors import (
    CertidomError,
    CResult,
    EnumerationLimitError,
    GraphError,
    ParseError,
)
from .graph import Graph, from_edge_list, is_connected
from .graph6 import parse_graph6


logger = logging.getLogger(__name__)

EDGE_PROBABILITIES = (0.2, 0.5, 0.8)

NumberedGraph = Tuple[int, CResult[Graph]]


def labeled_graph_count(n: int) -> int:
    return 1 << (n * (n - 1) // 2)


def enumerate_labeled_graphs(
    n: int, connected_only: bool = False, *, cap: Optional[int] = None
) -> Iterator[Graph]:
    """Yields every labeled graph on n vertices in edge-mask order.

    Bit i of the edge mask selects the i-th pair of bits.edge_slots(n), so
    the empty graph comes first and the complete graph last. Orders above
    @cap (default: the CERTIDOM_MAX_N setting) are refused up front.

    Examples:
        >>> len(list(enumerate_labeled_graphs(3)))
        8
        >>> len(list(enumerate_labeled_graphs(4, connected_only=True)))
        38
    """
    cap = enumeration_cap() if cap is None else cap
    if n < 1:
        raise GraphError(f"Cannot enumerate graphs of order {n}")
    if n > cap:
        raise EnumerationLimitError(n, cap)
    return _labeled_graphs(n, connected_only)


def _labeled_graphs(n: int, connected_only: bool) -> Iterator[Graph]:
    slots = bits.edge_slots(n)
    for mask in range(labeled_graph_count(n)):
        G = from_edge_list(
            n, (slots[i] for i in bits.iter_bits(mask))
        )
        if connected_only and not is_connected(G):
            continue
        yield G


def ingest_graph6_lines(
    lines: Iterable[str], *, first_line: int = 1
) -> Iterator[NumberedGraph]:
    """Parses graph6 lines one at a time.

    Blank lines are skipped. A malformed line yields an Err carrying the
    line number instead of ending the stream.
    """
    for number, line in enumerate(lines, start=first_line):
        if not line.strip():
            continue
        try:
            yield number, Ok(parse_graph6(line.strip(), line_number=number))
        except ParseError as e:
            logger.warning(
                "Skipping malformed graph6 line. | line=%d  error=%s",
                number,
                e,
            )
            yield number, Err(e)


def ingest_graph6_file(path: Path) -> Iterator[NumberedGraph]:
    """Reads a graph6 file; I/O failures raise a CertidomError."""
    try:
        text = path.read_text()
    except OSError as e:
        raise CertidomError(
            f"Unable to read graph6 file: {path}", cause=e
        ) from e
    return ingest_graph6_lines(text.splitlines())


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    """An Erdos-Renyi G(n, p) sample."""
    return from_edge_list(
        n, (slot for slot in bits.edge_slots(n) if rng.random() < p)
    )


def sample_corona_pairs(
    seed: int, count: int, max_order: int
) -> List[Tuple[Graph, PartitionFamily]]:
    """Seeded (graph, partition family) pairs with 1..@max_order vertices.

    Examples:
        >>> a = sample_corona_pairs(7, 3, 4)
        >>> a == sample_corona_pairs(7, 3, 4)
        True
    """
    rng = random.Random(seed)
    pairs = []
    for _ in range(count):
        n = rng.randint(1, max_order)
        G = random_graph(n, rng.choice(EDGE_PROBABILITIES), rng)
        pairs.append((G, random_family(G, rng)))
    logger.debug(
        "Sampled corona pairs. | seed=%d  count=%d  max_order=%d",
        seed,
        count,
        max_order,
    )
    return pairs
