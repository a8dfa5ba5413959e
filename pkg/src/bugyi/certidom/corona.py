"""Partition families over neighbourhoods and the coronas built from them.

Given a graph G and, for every vertex v, a partition P(v) of N(v), the
P-corona of G has one vertex (v,1) per vertex of G and one vertex (v,A) per
block A of P(v). Each (v,1) is joined to its own blocks, and for every edge
uv of G the block of P(v) holding u is joined to the block of P(u) holding v.
Trivial partitions give the ordinary corona G o K1; all-singleton partitions
give the 2-subdivision of G.
"""

from dataclasses import dataclass
import enum
from itertools import product
import logging
import random
import re
from typing import (
    Any,
    Callable,
    Dict,
    Iterable,
    Iterator,
    List,
    Optional,
    Sequence,
    Tuple,
)

from result import Err, Ok

from . import bits
from .domination import is_dominating, is_minimal_dominating
from .errors import CResult, GraphError, ParseError, PartitionError
from .graph import Graph, from_edge_list, private_neighborhood
from .graph6 import encode_graph6, format_edge_list_text
from .types import T
from .vertexset import VertexSet


logger = logging.getLogger(__name__)

# Sampling enumerates the partitions of a neighbourhood; keep that small.
MAX_SAMPLED_DEGREE = 10


@dataclass(frozen=True)
class PartitionFamily:
    """blocks[v] is the ordered block list of P(v)."""

    n: int
    blocks: Tuple[Tuple[VertexSet, ...], ...]

    def __post_init__(self) -> None:
        if len(self.blocks) != self.n:
            raise GraphError(
                f"Expected {self.n} block lists, got {len(self.blocks)}"
            )
        for parts in self.blocks:
            for block in parts:
                if block.n != self.n:
                    raise GraphError(
                        f"Block {block} does not live on {self.n} vertices"
                    )

    @classmethod
    def from_lists(
        cls, n: int, lists: Sequence[Sequence[Iterable[int]]]
    ) -> "PartitionFamily":
        """
        Examples:
            >>> lists = [[[1], [2]], [[0, 2]], [[0, 1]]]
            >>> P = PartitionFamily.from_lists(3, lists)
            >>> P.part_count(0), P.part_count(1)
            (2, 1)
        """
        return cls(
            n,
            tuple(
                tuple(VertexSet.of(n, block) for block in parts)
                for parts in lists
            ),
        )

    def parts(self, v: int) -> Tuple[VertexSet, ...]:
        return self.blocks[v]

    def part_count(self, v: int) -> int:
        return len(self.blocks[v])

    def to_lists(self) -> List[List[List[int]]]:
        return [[block.to_list() for block in parts] for parts in self.blocks]

    def __str__(self) -> str:
        return format_partition_family(self)


class ViolationReason(enum.Enum):
    ORDER = "family and graph differ in order"
    EMPTY_BLOCK = "empty block"
    FOREIGN = "foreign element"
    OVERLAP = "overlap"
    MISSING = "missing element"


@dataclass(frozen=True)
class PartitionViolation:
    """The first place where a family fails to partition a neighbourhood."""

    vertex: int
    reason: ViolationReason
    elements: Tuple[int, ...] = ()

    def __str__(self) -> str:
        where = f"vertex {self.vertex}: {self.reason.value}"
        if self.elements:
            where += " {" + ",".join(str(v) for v in self.elements) + "}"
        return where


@dataclass(frozen=True)
class CoronaTag:
    """Names a vertex of a P-corona: (v,1) when @block is None, else
    (v,A)."""

    vertex: int
    block: Optional[VertexSet] = None

    def __str__(self) -> str:
        if self.block is None:
            return f"({self.vertex},1)"
        members = ",".join(str(u) for u in self.block)
        return f"({self.vertex},{{{members}}})"


@dataclass(frozen=True)
class PCoronaGraph:
    graph: Graph
    labels: Tuple[CoronaTag, ...]

    @property
    def base_order(self) -> int:
        return sum(1 for tag in self.labels if tag.block is None)

    def to_json(self) -> Dict[str, Any]:
        return {
            "n": self.graph.n,
            "graph6": encode_graph6(self.graph),
            "edges": [list(edge) for edge in self.graph.edges()],
            "labels": [str(tag) for tag in self.labels],
        }


@dataclass(frozen=True)
class MaximalityReport:
    """Evidence for (or against) maximality of a partition family.

    @dominating_set holds the vertices with exactly two blocks and
    @oversized those with more than two. @private_neighbors pairs each
    member of @dominating_set with one of its private neighbours whenever
    that set is a minimal dominating set.
    """

    maximal: bool
    dominating_set: VertexSet
    oversized: VertexSet
    private_neighbors: Tuple[Tuple[int, int], ...]

    def to_json(self) -> Dict[str, Any]:
        return {
            "maximal": self.maximal,
            "dominating_set": self.dominating_set.to_list(),
            "oversized": self.oversized.to_list(),
            "private_neighbors": [list(p) for p in self.private_neighbors],
        }


def find_partition_violation(
    G: Graph, P: PartitionFamily
) -> Optional[PartitionViolation]:
    if P.n != G.n:
        return PartitionViolation(-1, ViolationReason.ORDER, (P.n, G.n))

    for v in range(G.n):
        seen = 0
        for block in P.parts(v):
            if not block:
                return PartitionViolation(v, ViolationReason.EMPTY_BLOCK)
            foreign = block.mask & ~G.adj[v]
            if foreign:
                return PartitionViolation(
                    v, ViolationReason.FOREIGN, tuple(bits.iter_bits(foreign))
                )
            overlap = block.mask & seen
            if overlap:
                return PartitionViolation(
                    v, ViolationReason.OVERLAP, tuple(bits.iter_bits(overlap))
                )
            seen |= block.mask
        missing = G.adj[v] & ~seen
        if missing:
            return PartitionViolation(
                v, ViolationReason.MISSING, tuple(bits.iter_bits(missing))
            )
    return None


def validate_partition_family(
    G: Graph, P: PartitionFamily
) -> CResult[PartitionFamily]:
    """
    Examples:
        >>> from bugyi.certidom.graph import from_edge_list
        >>> P3 = from_edge_list(3, [(0, 1), (1, 2)])
        >>> bad = PartitionFamily.from_lists(3, [[[1]], [[0]], [[1]]])
        >>> str(validate_partition_family(P3, bad).err())
        'Invalid partition family: vertex 1: missing element {2}'
    """
    violation = find_partition_violation(G, P)
    if violation is None:
        return Ok(P)
    return Err(PartitionError(violation))


def _require_valid(G: Graph, P: PartitionFamily) -> None:
    violation = find_partition_violation(G, P)
    if violation is not None:
        raise PartitionError(violation)


def trivial_family(G: Graph) -> PartitionFamily:
    return PartitionFamily(
        G.n,
        tuple(
            (VertexSet(G.n, row),) if row else () for row in G.adj
        ),
    )


def singleton_family(G: Graph) -> PartitionFamily:
    return PartitionFamily(
        G.n,
        tuple(
            tuple(VertexSet(G.n, 1 << u) for u in bits.iter_bits(row))
            for row in G.adj
        ),
    )


def _assemble(
    G: Graph, blocks: Sequence[Sequence[VertexSet]]
) -> PCoronaGraph:
    labels = [CoronaTag(v) for v in range(G.n)]
    edges = []
    # (v, u) -> index of the block vertex of P(v) that contains u
    holder: Dict[Tuple[int, int], int] = {}
    for v in range(G.n):
        for block in blocks[v]:
            index = len(labels)
            labels.append(CoronaTag(v, block))
            edges.append((v, index))
            for u in block:
                holder[v, u] = index

    for u, v in G.edges():
        edges.append((holder[v, u], holder[u, v]))

    return PCoronaGraph(from_edge_list(len(labels), edges), tuple(labels))


def p_corona(G: Graph, P: PartitionFamily) -> PCoronaGraph:
    """Builds the P-corona of G.

    Base vertices (v,1) keep indices 0..n-1; block vertices follow in
    (v, block position) order.

    Examples:
        >>> from bugyi.certidom.graph import from_edge_list
        >>> K2 = from_edge_list(2, [(0, 1)])
        >>> pc = p_corona(K2, trivial_family(K2))
        >>> pc.graph.edges(), [str(tag) for tag in pc.labels]
        ([(0, 2), (1, 3), (2, 3)], ['(0,1)', '(1,1)', '(0,{1})', '(1,{0})'])
    """
    _require_valid(G, P)
    pc = _assemble(G, P.blocks)
    logger.debug(
        "Built P-corona. | base_order=%d  order=%d", G.n, pc.graph.n
    )
    return pc


def corona_k1(G: Graph) -> PCoronaGraph:
    """The corona G o K1: one pendant leaf per vertex of G.

    An isolated vertex v has no blocks under the trivial family, so it gets
    a pendant tagged (v,{}) instead.
    """
    blocks = [
        (VertexSet(G.n, row),) if row else (VertexSet.empty(G.n),)
        for row in G.adj
    ]
    return _assemble(G, blocks)


def two_subdivision(G: Graph) -> PCoronaGraph:
    """Every edge uv becomes a path u, u_e, v_e, v."""
    return p_corona(G, singleton_family(G))


def _same_neighbourhoods(P1: PartitionFamily, P2: PartitionFamily) -> None:
    if P1.n != P2.n:
        raise GraphError(
            f"Families over {P1.n} and {P2.n} vertices cannot be compared"
        )
    for v in range(P1.n):
        union1 = bits.mask_of(u for block in P1.parts(v) for u in block)
        union2 = bits.mask_of(u for block in P2.parts(v) for u in block)
        if union1 != union2:
            raise GraphError(
                f"Families partition different neighbourhoods of vertex {v}"
            )


def is_refinement(P1: PartitionFamily, P2: PartitionFamily) -> bool:
    """True iff every block of P1(v) lies inside some block of P2(v)."""
    _same_neighbourhoods(P1, P2)
    return all(
        any(A.issubset(B) for B in P2.parts(v))
        for v in range(P1.n)
        for A in P1.parts(v)
    )


def _multi_block_vertices(
    P: PartitionFamily, predicate: Callable[[int], bool]
) -> VertexSet:
    return VertexSet.of(
        P.n, (v for v in range(P.n) if predicate(P.part_count(v)))
    )


def equality_predicate(G: Graph, P: PartitionFamily) -> bool:
    """True iff the vertices with two or more blocks dominate G.

    This is exactly when the domination and certified domination numbers
    of the P-corona agree.
    """
    _require_valid(G, P)
    return is_dominating(G, _multi_block_vertices(P, lambda k: k >= 2))


def is_maximal_family(G: Graph, P: PartitionFamily) -> MaximalityReport:
    """Checks |P(v)| <= 2 everywhere and that the vertices with two blocks
    form a minimal dominating set."""
    _require_valid(G, P)
    D = _multi_block_vertices(P, lambda k: k == 2)
    oversized = _multi_block_vertices(P, lambda k: k > 2)

    private: Tuple[Tuple[int, int], ...] = ()
    minimal = is_minimal_dominating(G, D)
    if minimal:
        private = tuple(
            (v, min(private_neighborhood(G, v, D))) for v in D
        )
    return MaximalityReport(
        maximal=minimal and not oversized,
        dominating_set=D,
        oversized=oversized,
        private_neighbors=private,
    )


def p_corona_gamma_set(G: Graph, P: PartitionFamily) -> VertexSet:
    """A minimum dominating set of the P-corona with |V(G)| vertices.

    It takes (v,1) when P(v) has two or more blocks (or none) and the
    single block vertex (v, N(v)) otherwise; it is certified whenever
    equality_predicate holds.
    """
    _require_valid(G, P)
    order = G.n + sum(P.part_count(v) for v in range(G.n))
    chosen = []
    index = G.n
    for v in range(G.n):
        count = P.part_count(v)
        chosen.append(index if count == 1 else v)
        index += count
    return VertexSet.of(order, chosen)


def set_partitions(items: Sequence[T]) -> Iterator[List[List[T]]]:
    """Every set partition of @items via restricted growth strings.

    Blocks are ordered by their first element.

    Examples:
        >>> list(set_partitions([1, 2, 3]))[:2]
        [[[1, 2, 3]], [[1, 2], [3]]]
        >>> len(list(set_partitions([1, 2, 3, 4])))
        15
    """
    blocks: List[List[T]] = []

    def grow(i: int) -> Iterator[List[List[T]]]:
        if i == len(items):
            yield [list(block) for block in blocks]
            return
        for block in blocks:
            block.append(items[i])
            yield from grow(i + 1)
            block.pop()
        blocks.append([items[i]])
        yield from grow(i + 1)
        blocks.pop()

    return grow(0)


def _neighbourhood_partitions(
    G: Graph, v: int
) -> List[Tuple[VertexSet, ...]]:
    return [
        tuple(VertexSet.of(G.n, block) for block in partition)
        for partition in set_partitions(list(bits.iter_bits(G.adj[v])))
    ]


def all_families(G: Graph) -> Iterator[PartitionFamily]:
    """Every partition family of G (Bell-number many; small graphs only)."""
    options = [_neighbourhood_partitions(G, v) for v in range(G.n)]
    for choice in product(*options):
        yield PartitionFamily(G.n, tuple(choice))


def family_count(G: Graph) -> int:
    count = 1
    for row in G.adj:
        count *= bell_number(bits.popcount(row))
    return count


def bell_number(k: int) -> int:
    """
    Examples:
        >>> [bell_number(k) for k in range(6)]
        [1, 1, 2, 5, 15, 52]
    """
    row = [1]
    for _ in range(k):
        nxt = [row[-1]]
        for value in row:
            nxt.append(nxt[-1] + value)
        row = nxt
    return row[0]


def random_family(G: Graph, rng: random.Random) -> PartitionFamily:
    """Draws each P(v) uniformly among the partitions of N(v)."""
    blocks = []
    for v in range(G.n):
        if G.degree(v) > MAX_SAMPLED_DEGREE:
            raise GraphError(
                f"Vertex {v} has degree {G.degree(v)}; sampling supports at"
                f" most {MAX_SAMPLED_DEGREE}"
            )
        blocks.append(rng.choice(_neighbourhood_partitions(G, v)))
    return PartitionFamily(G.n, tuple(blocks))


def _merged(
    parts: Tuple[VertexSet, ...], n: int
) -> List[Tuple[VertexSet, ...]]:
    merged = []
    for grouping in set_partitions(list(range(len(parts)))):
        merged.append(
            tuple(
                VertexSet(n, bits.mask_of(u for i in group for u in parts[i]))
                for group in grouping
            )
        )
    return merged


def _split(
    parts: Tuple[VertexSet, ...], n: int
) -> List[Tuple[VertexSet, ...]]:
    per_block = [
        [
            tuple(VertexSet.of(n, piece) for piece in partition)
            for partition in set_partitions(block.to_list())
        ]
        for block in parts
    ]
    return [
        tuple(piece for pieces in choice for piece in pieces)
        for choice in product(*per_block)
    ]


def coarsenings(G: Graph, P: PartitionFamily) -> Iterator[PartitionFamily]:
    """Every family P'' != P that P refines, obtained by merging blocks."""
    _require_valid(G, P)
    options = [_merged(P.parts(v), G.n) for v in range(G.n)]
    for choice in product(*options):
        family = PartitionFamily(G.n, tuple(choice))
        if family != P:
            yield family


def refinements(G: Graph, P: PartitionFamily) -> Iterator[PartitionFamily]:
    """Every family P' != P that refines P, obtained by splitting blocks."""
    _require_valid(G, P)
    options = [_split(P.parts(v), G.n) for v in range(G.n)]
    for choice in product(*options):
        family = PartitionFamily(G.n, tuple(choice))
        if family != P:
            yield family


def format_partition_family(P: PartitionFamily) -> str:
    """
    Examples:
        >>> print(format_partition_family(
        ...     PartitionFamily.from_lists(3, [[[1], [2]], [[0]], [[0]]])
        ... ), end="")
        0: {1}|{2}
        1: {0}
        2: {0}
    """
    lines = []
    for v, parts in enumerate(P.blocks):
        rendered = "|".join(
            "{" + ",".join(str(u) for u in block) + "}" for block in parts
        )
        lines.append(f"{v}: {rendered}".rstrip())
    return "\n".join(lines) + "\n"


_LINE = re.compile(r"^\s*(\d+)\s*:(.*)$")
_BLOCK = re.compile(r"^\{\s*(\d+(?:\s*,\s*\d+)*)?\s*\}$")


def parse_partition_family(text: str, n: int) -> PartitionFamily:
    """Reads the "v: {a,b}|{c}" format; unlisted vertices get no blocks."""
    lists: List[Optional[List[List[int]]]] = [None] * n
    for number, line in enumerate(text.splitlines(), start=1):
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        match = _LINE.match(line)
        if match is None:
            raise ParseError(
                f"Expected 'v: {{a,b}}|{{c}}', got {line!r}",
                line_number=number,
            )
        v = int(match.group(1))
        if not 0 <= v < n:
            raise ParseError(
                f"Vertex {v} is outside 0..{n - 1}", line_number=number
            )
        if lists[v] is not None:
            raise ParseError(
                f"Vertex {v} is listed twice", line_number=number
            )

        parts: List[List[int]] = []
        body = match.group(2).strip()
        for chunk in body.split("|") if body else []:
            block = _BLOCK.match(chunk.strip())
            if block is None:
                raise ParseError(
                    f"Malformed block {chunk.strip()!r}", line_number=number
                )
            members = block.group(1) or ""
            parts.append([int(u) for u in members.split(",") if u.strip()])
        lists[v] = parts

    try:
        return PartitionFamily.from_lists(
            n, [parts or [] for parts in lists]
        )
    except GraphError as e:
        raise ParseError(
            "Partition family names unknown vertices", cause=e
        ) from e


def format_p_corona(pc: PCoronaGraph) -> str:
    """Edge-list text followed by the "(index) -> tag" label table."""
    table = "\n".join(
        f"{index} -> {tag}" for index, tag in enumerate(pc.labels)
    )
    return format_edge_list_text(pc.graph) + "\n" + table + "\n"
